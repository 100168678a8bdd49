#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilali/koszul_tor.hpp"
#include "hilali/linalg.hpp"
#include "hilali/model.hpp"

namespace hilali {

/// d: (ΛV)^p -> (ΛV)^{p+1} over the canonical monomial bases; rows[i] is the
/// image of source[i].
struct DifferentialBlock {
  std::vector<Monomial> source;
  std::vector<Monomial> target;
  std::vector<RationalRow> rows;
};

DifferentialBlock differentialBlock(const Model& model, int degree);

struct DegreeRow {
  int degree = 0;
  std::size_t chainDim = 0;
  std::size_t rankOut = 0;  // rank of d leaving this degree
  std::size_t betti = 0;
};

struct BettiTable {
  std::map<int, std::size_t> dims;  // nonzero entries only
  std::vector<DegreeRow> rows;
  int maxDegreeComputed = -1;
  std::size_t totalDim = 0;
  /// Set by completeBetti when H vanishes on the whole window above the
  /// formal dimension.
  bool complete = false;
  int formalDimension = 0;

  std::size_t at(int degree) const;
};

BettiTable betti(const Model& model, int maxDegree);

/// Σ deg y - Σ (deg x - 1).
int formalDimension(const Model& model);

/// Computes through formalDimension + (max generator degree), or through
/// `maxDegree` if that is larger.
BettiTable completeBetti(const Model& model, std::optional<int> maxDegree = {});

struct EulerCharacteristics {
  long chi = 0;
  long chiPi = 0;
};

/// Throws InputError if the table is not complete.
EulerCharacteristics eulerCharacteristics(const Model& model, const BettiTable& table);

enum class EllipticStatus { Elliptic, NotElliptic, NotCertified };

struct EllipticityCertificate {
  EllipticStatus status = EllipticStatus::NotCertified;
  bool elliptic = false;
  int formalDimensionBound = 0;
  std::string evidence;
};

/// Hyperelliptic models only (InputError otherwise): elliptic when the
/// pure-part images cut out a finite-length quotient of the even ring.
EllipticityCertificate certifyElliptic(const Model& model, const QuotientOptions& options = {});

enum class VerdictBranch { LengthBound, LowCorank, QuadraticCount, PowerOfTwo, FullComputation };

const char* toString(VerdictBranch branch);

struct VerdictOptions {
  bool assumeElliptic = false;
  std::optional<int> maxDegree;
};

struct HilaliVerdict {
  std::size_t dimV = 0;
  std::size_t dimH = 0;
  bool holds = false;
  int n = 0;
  int r = 0;
  BettiTable table;
  EllipticityCertificate certificate;
  EulerCharacteristics euler;
  bool chiNonNegative = false;
  bool chiPiNonPositive = false;
  bool signEquivalence = false;  // chiPi < 0 iff chi == 0
  VerdictBranch branch = VerdictBranch::FullComputation;
  std::size_t branchBound = 0;   // lower bound on dim H promised by the branch
  bool branchConsistent = true;  // branchBound <= dimH
  std::optional<std::size_t> quadraticClasses;

  bool signsOk() const noexcept { return chiNonNegative && chiPiNonPositive && signEquivalence; }
};

/// Requires a minimal model that is certified elliptic, or assumeElliptic.
HilaliVerdict hilaliVerdict(const Model& model, const VerdictOptions& options = {});

/// Number of independent classes in H spanned by products x_i x_j.
std::size_t quadraticClassCount(const Model& model);

std::vector<Element> cocycleBasis(const Model& model, int degree);
std::vector<Element> coboundaryBasis(const Model& model, int degree);
bool isCocycle(const Model& model, const Element& e);
/// `e` must be homogeneous (or zero).
bool isCoboundary(const Model& model, const Element& e);

/// Pure models only: q -> dim of the part of H spanned by classes with q odd
/// factors, summed over degrees up to the complete range.
std::map<int, std::size_t> lowerGradedBetti(const Model& model, std::optional<int> maxDegree = {});

}  // namespace hilali
