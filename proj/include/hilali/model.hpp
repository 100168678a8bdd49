#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hilali/algebra.hpp"

namespace hilali {

/// A presentation (ΛV, d): generators plus the image of d on each of them.
/// Each nonzero image must be homogeneous of degree deg(g) + 1; this is
/// enforced at construction. d² = 0 is not assumed, see checkDifferential.
class Model {
 public:
  Model() = default;
  /// `differential[i]` is d of generator i; missing trailing entries are zero.
  Model(std::string name, Universe universe, std::vector<Element> differential);

  const std::string& name() const noexcept { return name_; }
  const Universe& universe() const noexcept { return universe_; }
  const GeneratorList& generators() const { return *universe_; }
  const Element& differentialOf(std::size_t i) const { return differential_[i]; }
  std::size_t dimV() const { return universe_->size(); }

  /// Extends d as a derivation: d(ab) = (da)b + (-1)^{deg a} a(db).
  Element apply(const Element& e) const;
  Element applyToMonomial(const Monomial& m) const;

  std::vector<std::size_t> evenGenerators() const { return universe_->evenIndices(); }
  std::vector<std::size_t> oddGenerators() const { return universe_->oddIndices(); }

 private:
  std::string name_;
  Universe universe_;
  std::vector<Element> differential_;
};

/// Builds a model from generator specs and expression strings keyed by
/// generator name.
Model makeModel(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                const std::map<std::string, std::string>& differential, int minDegree = 2);

struct GeneratorCheck {
  std::string generator;
  bool degreeOk = true;
  bool squareZero = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<GeneratorCheck> entries;

  bool passed() const;
  /// Name of the first failing generator, empty if none.
  std::string firstFailure() const;
};

ValidationReport checkDifferential(const Model& model);

/// True iff every monomial of every differential image has word length >= 2.
bool checkMinimal(const Model& model);

struct Classification {
  bool isMinimal = false;
  bool isPure = false;
  bool isHyperelliptic = false;
  int n = 0;       // even generators
  int nPlusR = 0;  // odd generators
  int r = 0;       // nPlusR - n, negative for some non-elliptic inputs
};

Classification classify(const Model& model);

/// Replaces each dy by its component in ΛV^even. Throws InputError unless
/// the model is hyperelliptic.
Model purePart(const Model& model);

/// Splits `e` by the number of odd factors of each monomial.
std::map<int, Element> lowerGrading(const Element& e);

// Model documents, format tag "hilali-model/1":
//   { "format": "hilali-model/1", "name": "...",
//     "generators": [ {"name": "x1", "degree": 2}, ... ],
//     "differential": { "y1": "x1^2", ... } }
inline constexpr const char* kModelFormat = "hilali-model/1";

Model modelFromJson(const nlohmann::json& doc);
nlohmann::json modelToJson(const Model& model);
Model loadModel(const std::filesystem::path& path);

}  // namespace hilali
