#include "hilali/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "hilali/errors.hpp"

namespace hilali {

namespace {

bool validName(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void requireSameUniverse(const Element& a, const Element& b) {
  if (!sameUniverse(a.universe(), b.universe()))
    throw UniverseMismatch("operands belong to different generator lists");
}

}  // namespace

// ---------------------------------------------------------------- generators

GeneratorList::GeneratorList(const std::vector<std::pair<std::string, int>>& specs,
                             int minDegree) {
  generators_.reserve(specs.size());
  for (const auto& [name, degree] : specs) {
    if (!validName(name)) throw InputError("invalid generator name '" + name + "'");
    if (degree < minDegree)
      throw InputError("generator '" + name + "' has degree " + std::to_string(degree) +
                       ", expected at least " + std::to_string(minDegree));
    if (byName_.count(name)) throw InputError("duplicate generator name '" + name + "'");
    byName_.emplace(name, generators_.size());
    generators_.push_back(Generator{name, degree, generators_.size()});
  }
}

std::optional<std::size_t> GeneratorList::find(std::string_view name) const {
  auto it = byName_.find(std::string(name));
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GeneratorList::evenIndices() const {
  std::vector<std::size_t> out;
  for (const auto& g : generators_)
    if (g.even()) out.push_back(g.index);
  return out;
}

std::vector<std::size_t> GeneratorList::oddIndices() const {
  std::vector<std::size_t> out;
  for (const auto& g : generators_)
    if (g.odd()) out.push_back(g.index);
  return out;
}

int GeneratorList::maxDegree() const {
  int best = 0;
  for (const auto& g : generators_) best = std::max(best, g.degree);
  return best;
}

std::vector<std::pair<std::string, int>> GeneratorList::specs() const {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& g : generators_) out.emplace_back(g.name, g.degree);
  return out;
}

bool operator==(const GeneratorList& a, const GeneratorList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || a[i].degree != b[i].degree) return false;
  return true;
}

Universe makeUniverse(const std::vector<std::pair<std::string, int>>& specs, int minDegree) {
  return std::make_shared<const GeneratorList>(specs, minDegree);
}

bool sameUniverse(const Universe& a, const Universe& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ----------------------------------------------------------------- monomials

Monomial Monomial::unit(const GeneratorList& gens) {
  return Monomial(std::vector<std::uint32_t>(gens.size(), 0), 0);
}

Monomial Monomial::generator(const GeneratorList& gens, std::size_t index) {
  std::vector<std::uint32_t> e(gens.size(), 0);
  e.at(index) = 1;
  return Monomial(std::move(e), gens[index].degree);
}

Monomial Monomial::fromExponents(const GeneratorList& gens, std::vector<std::uint32_t> exponents) {
  if (exponents.size() != gens.size())
    throw UniverseMismatch("exponent vector length does not match the generator list");
  int degree = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens.isOdd(i) && exponents[i] > 1)
      throw InputError("odd generator '" + gens[i].name + "' repeated in a monomial");
    degree += gens[i].degree * static_cast<int>(exponents[i]);
  }
  return Monomial(std::move(exponents), degree);
}

bool Monomial::isUnit() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

int Monomial::oddCount(const GeneratorList& gens) const {
  int q = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (gens.isOdd(i)) q += static_cast<int>(exponents_[i]);
  return q;
}

int Monomial::wordLength() const {
  int total = 0;
  for (auto e : exponents_) total += static_cast<int>(e);
  return total;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<std::pair<int, Monomial>> multiply(const GeneratorList& gens, const Monomial& a,
                                                 const Monomial& b) {
  if (a.size() != gens.size() || b.size() != gens.size())
    throw UniverseMismatch("monomial does not match the generator list");
  std::vector<std::uint32_t> e(gens.size());
  // Moving each odd factor of b left past the odd factors of a with larger
  // index contributes one transposition.
  int inversions = 0;
  int oddOfASeen = 0;
  int oddOfATotal = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens.isOdd(i)) oddOfATotal += static_cast<int>(a.exponents_[i]);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens.isOdd(i)) {
      if (a.exponents_[i] && b.exponents_[i]) return std::nullopt;
      if (a.exponents_[i]) ++oddOfASeen;
      if (b.exponents_[i]) inversions += oddOfATotal - oddOfASeen;
    }
    e[i] = a.exponents_[i] + b.exponents_[i];
  }
  return std::pair<int, Monomial>{inversions % 2 ? -1 : 1,
                                  Monomial(std::move(e), a.degree_ + b.degree_)};
}

Monomial withoutGenerator(const GeneratorList& gens, const Monomial& m, std::size_t index) {
  std::vector<std::uint32_t> e = m.exponents_;
  if (e.at(index) == 0) throw std::logic_error("withoutGenerator: factor absent");
  --e[index];
  return Monomial(std::move(e), m.degree_ - gens[index].degree);
}

// ------------------------------------------------------------------ elements

Element Element::one(Universe universe) { return constant(std::move(universe), 1); }

Element Element::constant(Universe universe, const Scalar& c) {
  Element e(universe);
  e.addTerm(Monomial::unit(*universe), c);
  return e;
}

Element Element::generator(Universe universe, std::size_t index) {
  Element e(universe);
  e.addTerm(Monomial::generator(*universe, index), 1);
  return e;
}

Element Element::monomial(Universe universe, Monomial m, const Scalar& c) {
  Element e(std::move(universe));
  e.addTerm(m, c);
  return e;
}

std::optional<int> Element::homogeneousDegree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

bool Element::isHomogeneous() const { return terms_.empty() || homogeneousDegree().has_value(); }

void Element::addTerm(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Element& Element::operator+=(const Element& other) {
  if (!universe_) universe_ = other.universe_;
  requireSameUniverse(*this, other);
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (!universe_) universe_ = other.universe_;
  requireSameUniverse(*this, other);
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return sameUniverse(a.universe_, b.universe_) && a.terms_ == b.terms_;
}

Element mul(const Element& a, const Element& b) {
  requireSameUniverse(a, b);
  const auto& gens = *a.universe();
  Element out(a.universe());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto p = multiply(gens, ma, mb)) out.addTerm(p->second, p->first == 1 ? ca * cb : Scalar(-ca * cb));
  return out;
}

Element sandwich(const Monomial& left, const Element& e, const Monomial& right) {
  const auto& gens = *e.universe();
  Element out(e.universe());
  for (const auto& [m, c] : e.terms()) {
    auto lm = multiply(gens, left, m);
    if (!lm) continue;
    auto full = multiply(gens, lm->second, right);
    if (!full) continue;
    out.addTerm(full->second, lm->first * full->first == 1 ? c : Scalar(-c));
  }
  return out;
}

// --------------------------------------------------------------------- bases

namespace {

void enumerate(const GeneratorList& gens, const std::vector<bool>& allowed, std::size_t i,
               int remaining, std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::fromExponents(gens, exps));
    return;
  }
  if (i == gens.size()) return;
  if (!allowed[i]) {
    enumerate(gens, allowed, i + 1, remaining, exps, out);
    return;
  }
  const int deg = gens[i].degree;
  const int maxExp = gens.isOdd(i) ? 1 : remaining / deg;
  for (int k = 0; k <= maxExp && k * deg <= remaining; ++k) {
    exps[i] = static_cast<std::uint32_t>(k);
    enumerate(gens, allowed, i + 1, remaining - k * deg, exps, out);
  }
  exps[i] = 0;
}

}  // namespace

std::vector<Monomial> basis(const GeneratorList& gens, int degree) {
  return basis(gens, degree, std::vector<bool>(gens.size(), true));
}

std::vector<Monomial> basis(const GeneratorList& gens, int degree, const std::vector<bool>& allowed) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<std::uint32_t> exps(gens.size(), 0);
  enumerate(gens, allowed, 0, degree, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

Element mapToUniverse(const Element& e, const Universe& target) {
  Element out(target);
  if (e.isZero()) return out;
  const auto& src = e.generators();
  std::vector<std::optional<std::size_t>> image(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    image[i] = target->find(src[i].name);
    if (image[i] && (*target)[*image[i]].degree != src[i].degree)
      throw UniverseMismatch("generator '" + src[i].name + "' changes degree");
  }
  for (const auto& [m, c] : e.terms()) {
    std::vector<std::uint32_t> exps(target->size(), 0);
    std::vector<std::size_t> oddOrder;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!m.exponent(i)) continue;
      if (!image[i])
        throw UniverseMismatch("generator '" + src[i].name + "' is not in the target list");
      exps[*image[i]] += m.exponent(i);
      if (src.isOdd(i)) oddOrder.push_back(*image[i]);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < oddOrder.size(); ++a)
      for (std::size_t b = a + 1; b < oddOrder.size(); ++b)
        if (oddOrder[a] > oddOrder[b]) ++inversions;
    out.addTerm(Monomial::fromExponents(*target, std::move(exps)), inversions % 2 ? Scalar(-c) : c);
  }
  return out;
}

Element dropTermsWith(const Element& e, std::size_t index) {
  Element out(e.universe());
  for (const auto& [m, c] : e.terms())
    if (m.exponent(index) == 0) out.addTerm(m, c);
  return out;
}

// ------------------------------------------------------------------ printing

std::string toString(const GeneratorList& gens, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!m.exponent(i)) continue;
    if (!out.empty()) out += '*';
    out += gens[i].name;
    if (m.exponent(i) > 1) out += '^' + std::to_string(m.exponent(i));
  }
  return out;
}

std::string toString(const Element& e) {
  if (e.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = toString(e.generators(), m);
    if (mono.empty()) {
      out += toString(magnitude);
    } else {
      if (magnitude != 1) out += toString(magnitude) + '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace hilali
