#include <cctype>

#include "hilali/algebra.hpp"
#include "hilali/errors.hpp"

namespace hilali {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Universe& universe)
      : text_(text), universe_(universe) {}

  Element parse() {
    skipSpace();
    if (atEnd()) throw ParseError("empty expression", pos_);
    Element result(universe_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Element t = term();
      result += negate ? -t : t;
      skipSpace();
      if (atEnd()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negate = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer integer(const char* what) {
    skipSpace();
    const std::size_t start = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Element term() {
    skipSpace();
    if (atEnd()) throw ParseError("expected a term", pos_);
    Scalar coefficient = 1;
    bool needFactor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer("integer");
      Integer den = 1;
      skipSpace();
      if (!atEnd() && peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coefficient = Scalar(num, den);
      coefficient.canonicalize();
      skipSpace();
      if (!atEnd() && peek() == '*') {
        ++pos_;
      } else if (atEnd() || !std::isalpha(static_cast<unsigned char>(peek()))) {
        needFactor = false;
      }
    }
    const auto& gens = *universe_;
    Monomial mono = Monomial::unit(gens);
    int sign = 1;
    while (needFactor) {
      skipSpace();
      const std::size_t at = pos_;
      auto [index, power] = factor();
      if (gens.isOdd(index) && (power > 1 || mono.exponent(index) > 0))
        throw ParseError("odd generator '" + gens[index].name + "' repeated in a monomial", at);
      for (std::uint32_t k = 0; k < power; ++k) {
        auto p = multiply(gens, mono, Monomial::generator(gens, index));
        sign *= p->first;
        mono = p->second;
      }
      skipSpace();
      if (!atEnd() && peek() == '*') {
        ++pos_;
      } else {
        needFactor = false;
      }
    }
    return Element::monomial(universe_, mono, sign == 1 ? coefficient : Scalar(-coefficient));
  }

  std::pair<std::size_t, std::uint32_t> factor() {
    skipSpace();
    const std::size_t start = pos_;
    if (atEnd() || !std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a generator name", pos_);
    while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto index = universe_->find(name);
    if (!index) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    std::uint32_t power = 1;
    skipSpace();
    if (!atEnd() && peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      Integer p = integer("exponent");
      if (p <= 0 || !p.fits_uint_p()) throw ParseError("exponent must be a positive integer", at);
      power = static_cast<std::uint32_t>(p.get_ui());
    }
    return {*index, power};
  }

  std::string_view text_;
  const Universe& universe_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parseExpression(std::string_view text, const Universe& universe) {
  return ExpressionParser(text, universe).parse();
}

}  // namespace hilali
