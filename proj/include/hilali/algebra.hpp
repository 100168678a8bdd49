#pragma once

// Free graded-commutative algebra over the rationals.
//
// A Monomial stores one exponent per generator of its GeneratorList; odd
// generators carry exponent 0 or 1. Products are normalized eagerly: odd
// factors are kept in ascending generator index and the Koszul sign of the
// reordering is folded into the coefficient.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilali/rational.hpp"

namespace hilali {

struct Generator {
  std::string name;
  int degree = 0;
  std::size_t index = 0;

  bool odd() const noexcept { return degree % 2 != 0; }
  bool even() const noexcept { return degree % 2 == 0; }
};

/// Ordered, name-unique list of generators.
class GeneratorList {
 public:
  GeneratorList() = default;

  /// Throws InputError on duplicate or malformed names and on degrees below
  /// `minDegree`. Models read from files use minDegree 2; perturbed models
  /// need a degree-1 generator.
  explicit GeneratorList(const std::vector<std::pair<std::string, int>>& specs,
                         int minDegree = 2);

  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  bool isOdd(std::size_t i) const { return generators_[i].odd(); }

  std::vector<std::size_t> evenIndices() const;
  std::vector<std::size_t> oddIndices() const;
  int maxDegree() const;

  std::vector<std::pair<std::string, int>> specs() const;

  friend bool operator==(const GeneratorList& a, const GeneratorList& b);

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::size_t> byName_;
};

using Universe = std::shared_ptr<const GeneratorList>;

Universe makeUniverse(const std::vector<std::pair<std::string, int>>& specs,
                      int minDegree = 2);

/// True when both lists are the same object or compare equal.
bool sameUniverse(const Universe& a, const Universe& b);

class Monomial {
 public:
  Monomial() = default;

  static Monomial unit(const GeneratorList& gens);
  static Monomial generator(const GeneratorList& gens, std::size_t index);
  /// Throws InputError when an odd generator has exponent > 1.
  static Monomial fromExponents(const GeneratorList& gens,
                                std::vector<std::uint32_t> exponents);

  std::uint32_t exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  bool isUnit() const noexcept;

  /// Number of odd factors (the lower grading q).
  int oddCount(const GeneratorList& gens) const;
  /// Total number of factors counted with multiplicity.
  int wordLength() const;

  /// Graded order: degree first, then exponent vectors lexicographically
  /// (larger exponent of an earlier generator sorts first).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exponents_ > b.exponents_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

 private:
  Monomial(std::vector<std::uint32_t> exponents, int degree)
      : exponents_(std::move(exponents)), degree_(degree) {}

  friend std::optional<std::pair<int, Monomial>> multiply(const GeneratorList&,
                                                          const Monomial&,
                                                          const Monomial&);
  friend Monomial withoutGenerator(const GeneratorList&, const Monomial&, std::size_t);

  std::vector<std::uint32_t> exponents_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Product a*b as (sign, monomial); nullopt when an odd factor repeats.
std::optional<std::pair<int, Monomial>> multiply(const GeneratorList& gens,
                                                 const Monomial& a,
                                                 const Monomial& b);

/// Divides out one factor of generator `index`, which must be present. The
/// result is the cofactor that sits in front of the removed factor, so no
/// sign is involved for even generators.
Monomial withoutGenerator(const GeneratorList& gens, const Monomial& m,
                          std::size_t index);

class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  explicit Element(Universe universe) : universe_(std::move(universe)) {}

  static Element zero(Universe universe) { return Element(std::move(universe)); }
  static Element one(Universe universe);
  static Element constant(Universe universe, const Scalar& c);
  static Element generator(Universe universe, std::size_t index);
  static Element monomial(Universe universe, Monomial m, const Scalar& c = 1);

  const Universe& universe() const noexcept { return universe_; }
  const GeneratorList& generators() const { return *universe_; }
  const Terms& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t termCount() const noexcept { return terms_.size(); }

  /// Degree shared by all terms; nullopt for zero or inhomogeneous elements.
  std::optional<int> homogeneousDegree() const;
  bool isHomogeneous() const;

  /// Adds c*m, dropping the term if the coefficient cancels.
  void addTerm(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  Universe universe_;
  Terms terms_;
};

/// Product in the graded-commutative algebra. Throws UniverseMismatch when
/// the operands use different generator lists.
Element mul(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// left * e * right with Koszul signs; all three share `e`'s universe.
Element sandwich(const Monomial& left, const Element& e, const Monomial& right);

/// All monomials of exactly `degree`, sorted in canonical order. Degree 0
/// yields the unit monomial only.
std::vector<Monomial> basis(const GeneratorList& gens, int degree);

/// Same, restricted to the generators flagged in `allowed`.
std::vector<Monomial> basis(const GeneratorList& gens, int degree,
                            const std::vector<bool>& allowed);

/// Re-expresses `e` over `target`, matching generators by name. Odd factors
/// are re-sorted with sign. Throws UniverseMismatch if a generator of a term
/// is missing from `target`.
Element mapToUniverse(const Element& e, const Universe& target);

/// Drops every term divisible by generator `index` (the image of `e` in the
/// quotient by the ideal generated by that generator).
Element dropTermsWith(const Element& e, std::size_t index);

/// Parses the expression grammar
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational ['*'] factor ('*' factor)* | rational | factor ('*' factor)*
///   factor   := name ['^' posint]
///   rational := int ['/' posint]
/// Throws ParseError with a byte position.
Element parseExpression(std::string_view text, const Universe& universe);

std::string toString(const GeneratorList& gens, const Monomial& m);
std::string toString(const Element& e);

}  // namespace hilali
