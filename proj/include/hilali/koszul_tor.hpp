#pragma once

// Finite-length quotients M = R/(P_1..P_m) of a weighted polynomial ring,
// regular sequences, Halperin bases of pure models, and Tor over
// S = Q[λ_1..λ_r] via the Koszul complex.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilali/algebra.hpp"
#include "hilali/linalg.hpp"
#include "hilali/model.hpp"

namespace hilali {

struct QuotientOptions {
  /// Largest filtration degree tried for inhomogeneous relations; 0 picks
  /// topBound + 2 * (max relation degree).
  int maxProbe = 0;
};

/// A certified quotient of finite length. The standard basis consists of
/// monomials; action(j) is multiplication by ring generator j in that basis.
class QuotientModule {
 public:
  const Universe& ring() const noexcept { return ring_; }
  const std::vector<Element>& relations() const noexcept { return relations_; }
  const std::vector<Monomial>& standardBasis() const noexcept { return basis_; }
  std::size_t length() const noexcept { return basis_.size(); }

  /// Homogeneous relations give a graded module; fibers of deformations
  /// generally do not.
  bool graded() const noexcept { return graded_; }
  /// Top degree of a standard monomial (the socle degree when graded).
  int socleDegree() const noexcept { return socleDegree_; }
  std::map<int, std::size_t> dimensionsByDegree() const;

  const Matrix& action(std::size_t j) const { return actions_.at(j); }
  /// Coordinates of the class of 1.
  std::vector<Scalar> unitVector() const { return unit_; }
  /// Coordinates of the class of f, i.e. f(T) applied to the unit.
  std::vector<Scalar> coordinates(const Element& f) const;
  /// Matrix of multiplication by f.
  Matrix multiplication(const Element& f) const;

  /// Human-readable summary of how finiteness was certified.
  const std::string& certificate() const noexcept { return certificate_; }

 private:
  friend struct QuotientBuilder;

  Universe ring_;
  std::vector<Element> relations_;
  std::vector<Monomial> basis_;
  std::vector<Matrix> actions_;
  std::vector<Scalar> unit_;
  bool graded_ = true;
  int socleDegree_ = 0;
  std::string certificate_;
};

enum class QuotientStatus { Finite, NotFinite, ProbeExhausted };

struct QuotientResult {
  QuotientStatus status = QuotientStatus::ProbeExhausted;
  std::optional<QuotientModule> module;
  int probedTo = 0;
  std::string diagnostic;

  bool finite() const noexcept { return status == QuotientStatus::Finite; }
};

/// `ring` must contain even generators only; relations are elements over it.
QuotientResult quotientBasis(const Universe& ring, const std::vector<Element>& relations,
                             const QuotientOptions& options = {});

/// Polynomial ring on the even generators of a model.
Universe evenRing(const Model& model);

/// Re-expresses an element of the model algebra that involves only even
/// generators as an element of `ring`.
Element toRing(const Element& e, const Universe& ring);

/// n relations in n variables: regular iff the quotient has finite length.
/// Throws InputError on a count mismatch, IndeterminateError when the probe
/// runs out.
bool isRegularSequence(const Universe& ring, const std::vector<Element>& relations,
                       const QuotientOptions& options = {});

/// S-module structure on M: λ_i acts as multiplication by parameters[i].
struct SModuleStructure {
  std::vector<Element> parameters;

  std::size_t parameterCount() const noexcept { return parameters.size(); }
};

struct HalperinBasis {
  /// Row j holds the coefficients of z_j over the odd generators (in
  /// generator order).
  Matrix combination;
  std::vector<Element> zImages;  // d z_j as ring elements
  QuotientModule module;         // R/(d z_1..d z_n)
  SModuleStructure structure;    // λ_i -> d z_{n+i}
  std::string strategy;
  int attempts = 0;
};

struct HalperinOptions {
  std::uint64_t seed = 0;
  int budget = 64;
  QuotientOptions quotient;
};

/// Throws InputError unless the model is pure, IndeterminateError when the
/// search budget runs out.
HalperinBasis halperinBasis(const Model& model, const HalperinOptions& options = {});

struct TorTable {
  int r = 0;
  std::map<int, std::size_t> dims;
  std::size_t total = 0;
};

/// Differential C_k -> C_{k-1} of M ⊗ Λ^k W. C_k has basis e_v ⊗ w_S with S
/// running over k-subsets in increasing bitmask order, v fastest.
Matrix koszulDifferential(const QuotientModule& m, const SModuleStructure& s, int k);

TorTable torTable(const QuotientModule& m, const SModuleStructure& s);

struct TorBoundsReport {
  int n = 0;
  int r = 0;
  std::size_t length = 0;
  bool firstOk = true;   // dims[0] >= n + 1
  bool lastOk = true;    // dims[r] >= n + 1
  bool lengthOk = true;  // r == 0: length >= 2n
  bool passed() const noexcept { return firstOk && lastOk && lengthOk; }
};

TorBoundsReport torBoundsCheck(const QuotientModule& m, const SModuleStructure& s, int n);

struct PairingReport {
  std::size_t socleDimension = 0;
  bool nondegenerate = false;
  bool perfect = false;
  std::string detail;
};

/// Socle must be one-dimensional and the multiplication pairing into it
/// nondegenerate. Graded modules are checked blockwise; others through a
/// seeded random functional.
PairingReport dualityPairing(const QuotientModule& m, std::uint64_t seed = 0);

struct CrossCheckReport {
  std::size_t dimH = 0;
  TorTable tor;
  std::map<int, std::size_t> lowerGraded;  // q -> dim H_q
  bool totalsAgree = false;
  bool gradingAgree = false;
  std::string strategy;
  bool passed() const noexcept { return totalsAgree && gradingAgree; }
};

/// Compares H(ΛV, d) with Tor_S(M, Q) for a pure elliptic model.
CrossCheckReport torViaModelCrossCheck(const Model& model, const HalperinOptions& options = {});

}  // namespace hilali
