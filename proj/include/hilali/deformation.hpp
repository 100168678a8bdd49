#pragma once

// One-parameter deformations: families of quotients R/(P_i + t Q_i) and
// perturbed differentials d + ξδ that cancel an even generator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hilali/cohomology.hpp"
#include "hilali/koszul_tor.hpp"
#include "hilali/model.hpp"

namespace hilali {

/// Uniform numerator in [-10^6, 10^6] \ {0} over a denominator in [1, 10^6].
Scalar sampleGenericRational(std::mt19937_64& rng);

class ModuleFamily {
 public:
  ModuleFamily(Universe ring, std::vector<Element> base, std::vector<Element> perturbation,
               QuotientOptions options = {});

  /// P_i + t x_i; needs one relation per ring generator.
  static ModuleFamily linearPerturbation(const Universe& ring, const std::vector<Element>& relations,
                                         QuotientOptions options = {});

  const Universe& ring() const noexcept { return ring_; }
  std::vector<Element> relationsAt(const Scalar& xi) const;
  /// Cached.
  const QuotientResult& fiber(const Scalar& xi) const;

 private:
  Universe ring_;
  std::vector<Element> base_;
  std::vector<Element> perturbation_;
  QuotientOptions options_;
  mutable std::map<Scalar, QuotientResult> cache_;
};

struct FlatnessReport {
  std::uint64_t seed = 0;
  std::vector<std::pair<Scalar, std::optional<std::size_t>>> lengths;  // nullopt: not finite
  bool indeterminate = false;
  bool flat = false;
  std::size_t commonLength = 0;
};

FlatnessReport flatnessCheck(const ModuleFamily& family, int samples, std::uint64_t seed);

/// True when M is a product of copies of fields with distinct points, tested
/// through a seeded random linear form: its characteristic polynomial on M
/// must have degree length(M) and be squarefree.
bool isReduced(const QuotientModule& m, std::uint64_t seed = 0);

struct FiberTor {
  Scalar xi;
  TorTable tor;
  bool reduced = false;
  /// tor.dims[k] == binom(r, k) for every k: the origin is the only point
  /// over λ = 0.
  bool binomial = false;
  /// Reduced fibers only: tor.dims[k] == binom(r, k) * tor.dims[0].
  bool pointCount = true;
  /// r >= 1: tor.dims[k] >= binom(r, k), the contribution of the origin.
  bool originBound = true;
  bool dominated = true;  // tor.dims[k] <= special.dims[k] for every k
};

struct SemicontinuityReport {
  std::uint64_t seed = 0;
  TorTable special;
  std::vector<FiberTor> fibers;
  std::size_t violations = 0;        // fibers not dominated by the special one
  std::size_t patternMismatches = 0; // failures of pointCount or originBound
  std::size_t binomialFibers = 0;
  bool indeterminate = false;
  bool passed() const noexcept { return !indeterminate && violations == 0 && patternMismatches == 0; }
};

SemicontinuityReport torSemicontinuityCheck(const ModuleFamily& family, const SModuleStructure& s, int samples,
                                            std::uint64_t seed);

/// (ΛV, d) ⊗ (Λȳ, 0) with deg ȳ = deg x - 1, and the derivation δ: ȳ -> x.
class PerturbedModel {
 public:
  PerturbedModel(const Model& base, std::size_t evenIndex);

  const Model& base() const noexcept { return base_; }
  const std::string& generatorName() const noexcept { return xName_; }
  const std::string& barName() const noexcept { return barName_; }
  const Model& tensorModel() const noexcept { return tensor_; }
  const Model& delta() const noexcept { return delta_; }

  /// d + ξδ on ΛW.
  Model at(const Scalar& xi) const;
  /// The base with x removed and every term divisible by x dropped.
  Model quotientModel() const;

  /// dδ + δd = 0 on generators and on products ȳ·g.
  bool anticommutes() const;
  /// dδ = 0 and δd = 0 on the same elements.
  bool strictlyCommutes() const;

 private:
  Model base_;
  std::size_t evenIndex_;
  std::string xName_;
  std::string barName_;
  Model tensor_;
  Model delta_;
};

struct ReductionStep {
  std::string generator;
  int generatorDegree = 0;
  std::size_t dimCurrent = 0;
  std::size_t dimTensor = 0;
  std::size_t dimQuotient = 0;
  std::vector<Scalar> xis;
  std::vector<std::size_t> dimPerturbed;
  bool squareZero = true;
  bool collapse = true;         // dim H(ΛW, d_ξ) == dim H(quotient)
  bool doubling = true;         // dim H(ΛW, d_0) == 2 dim H(current)
  bool semicontinuity = true;   // dim H(ΛW, d_ξ) <= dim H(ΛW, d_0)
  bool anticommutes = true;
  bool strictlyCommutes = false;

  bool passed() const noexcept { return squareZero && collapse && doubling && semicontinuity && anticommutes; }
};

struct ReductionReport {
  std::uint64_t seed = 0;
  int n = 0;
  int r = 0;
  std::size_t dimH = 0;
  std::vector<ReductionStep> steps;
  std::size_t terminalDim = 0;
  bool terminalZeroDifferential = false;
  bool terminalOk = false;   // terminal dim == 2^{n+r}
  bool chainOk = false;      // 2^n dim H >= 2^{n+r}
  bool powerBound = false;   // dim H >= 2^r

  bool passed() const;
};

/// Requires a hyperelliptic, certified-elliptic model.
ReductionReport perturbAndReduce(const Model& model, int samples, std::uint64_t seed);

}  // namespace hilali
