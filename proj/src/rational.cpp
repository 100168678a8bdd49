#include "hilali/rational.hpp"

#include <cctype>

#include "hilali/errors.hpp"

namespace hilali {

std::string toString(const Scalar& value) { return value.get_str(); }

std::string toString(const Integer& value) { return value.get_str(); }

Scalar parseScalar(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw InputError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

}  // namespace hilali
