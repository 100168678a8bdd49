#include "hilali/model.hpp"

#include <fstream>

#include "hilali/errors.hpp"

namespace hilali {

Model::Model(std::string name, Universe universe, std::vector<Element> differential)
    : name_(std::move(name)), universe_(std::move(universe)), differential_(std::move(differential)) {
  const auto& gens = *universe_;
  if (differential_.size() > gens.size())
    throw InputError("more differential images than generators");
  differential_.resize(gens.size(), Element(universe_));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element& image = differential_[i];
    if (!image.universe()) image = Element(universe_);
    if (image.isZero()) continue;
    if (!sameUniverse(image.universe(), universe_))
      throw UniverseMismatch("differential of '" + gens[i].name + "' uses another generator list");
    image = mapToUniverse(image, universe_);
    const auto deg = image.homogeneousDegree();
    if (!deg || *deg != gens[i].degree + 1)
      throw InputError("differential of '" + gens[i].name + "' is not homogeneous of degree " +
                       std::to_string(gens[i].degree + 1));
  }
}

Element Model::applyToMonomial(const Monomial& m) const {
  const auto& gens = *universe_;
  Element out(universe_);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens.isOdd(i) || m.exponent(i) == 0 || differential_[i].isZero()) continue;
    Element term = sandwich(Monomial::unit(gens), differential_[i], withoutGenerator(gens, m, i));
    out += term * Scalar(m.exponent(i));
  }

  // Odd factors in ascending order: m = evens * y_{j0} * y_{j1} * ...
  // The l-th odd factor picks up the sign (-1)^l.
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens.isOdd(i) && m.exponent(i)) odd.push_back(i);
  std::vector<std::uint32_t> before(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens.isOdd(i)) before[i] = m.exponent(i);
  for (std::size_t l = 0; l < odd.size(); ++l) {
    const std::size_t j = odd[l];
    if (!differential_[j].isZero()) {
      std::vector<std::uint32_t> after(gens.size(), 0);
      for (std::size_t k = l + 1; k < odd.size(); ++k) after[odd[k]] = 1;
      Element term = sandwich(Monomial::fromExponents(gens, before), differential_[j],
                              Monomial::fromExponents(gens, std::move(after)));
      if (l % 2) term *= Scalar(-1);
      out += term;
    }
    before[j] = 1;
  }
  return out;
}

Element Model::apply(const Element& e) const {
  if (!sameUniverse(e.universe(), universe_) && !e.isZero())
    throw UniverseMismatch("element uses generators unknown to model '" + name_ + "'");
  Element out(universe_);
  for (const auto& [m, c] : e.terms()) out += applyToMonomial(m) * c;
  return out;
}

Model makeModel(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                const std::map<std::string, std::string>& differential, int minDegree) {
  Universe u = makeUniverse(generators, minDegree);
  std::vector<Element> d(u->size(), Element(u));
  for (const auto& [gen, text] : differential) {
    auto index = u->find(gen);
    if (!index) throw InputError("differential given for unknown generator '" + gen + "'");
    try {
      d[*index] = parseExpression(text, u);
    } catch (const ParseError& e) {
      throw InputError("differential of '" + gen + "': " + e.what());
    }
  }
  return Model(std::move(name), u, std::move(d));
}

// ---------------------------------------------------------------- validation

bool ValidationReport::passed() const {
  for (const auto& e : entries)
    if (!e.degreeOk || !e.squareZero) return false;
  return true;
}

std::string ValidationReport::firstFailure() const {
  for (const auto& e : entries)
    if (!e.degreeOk || !e.squareZero) return e.generator;
  return {};
}

ValidationReport checkDifferential(const Model& model) {
  ValidationReport report;
  const auto& gens = model.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    GeneratorCheck check;
    check.generator = gens[i].name;
    const Element& dg = model.differentialOf(i);
    if (!dg.isZero()) {
      const auto deg = dg.homogeneousDegree();
      check.degreeOk = deg && *deg == gens[i].degree + 1;
      const Element dd = model.apply(dg);
      check.squareZero = dd.isZero();
      if (!check.squareZero) check.detail = "d(d " + gens[i].name + ") = " + toString(dd);
      if (!check.degreeOk) check.detail = "d " + gens[i].name + " has the wrong degree";
    }
    report.entries.push_back(std::move(check));
  }
  return report;
}

bool checkMinimal(const Model& model) {
  for (std::size_t i = 0; i < model.dimV(); ++i)
    for (const auto& [m, c] : model.differentialOf(i).terms())
      if (m.wordLength() < 2) return false;
  return true;
}

Classification classify(const Model& model) {
  const auto& gens = model.generators();
  Classification c;
  c.isMinimal = checkMinimal(model);
  c.n = static_cast<int>(gens.evenIndices().size());
  c.nPlusR = static_cast<int>(gens.oddIndices().size());
  c.r = c.nPlusR - c.n;

  bool evenClosed = true;
  for (auto i : gens.evenIndices())
    if (!model.differentialOf(i).isZero()) evenClosed = false;

  bool pure = evenClosed;
  bool hyper = evenClosed;
  for (auto j : gens.oddIndices()) {
    for (const auto& [m, coeff] : model.differentialOf(j).terms()) {
      const int q = m.oddCount(gens);
      if (q != 0) pure = false;
      if (m.wordLength() - q == 0) hyper = false;  // no even factor
    }
  }
  c.isPure = pure;
  c.isHyperelliptic = hyper;
  return c;
}

Model purePart(const Model& model) {
  if (!classify(model).isHyperelliptic)
    throw InputError("model '" + model.name() + "' is not hyperelliptic");
  const auto& gens = model.generators();
  std::vector<Element> d;
  d.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element part(model.universe());
    for (const auto& [m, c] : model.differentialOf(i).terms())
      if (m.oddCount(gens) == 0) part.addTerm(m, c);
    d.push_back(std::move(part));
  }
  return Model(model.name(), model.universe(), std::move(d));
}

std::map<int, Element> lowerGrading(const Element& e) {
  std::map<int, Element> parts;
  for (const auto& [m, c] : e.terms()) {
    const int q = m.oddCount(e.generators());
    auto it = parts.try_emplace(q, Element(e.universe())).first;
    it->second.addTerm(m, c);
  }
  return parts;
}

// ------------------------------------------------------------------------ io

Model modelFromJson(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw InputError("model document must be an object");
    if (doc.value("format", std::string{}) != kModelFormat)
      throw InputError(std::string("model document must declare format '") + kModelFormat + "'");
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& g : doc.at("generators"))
      gens.emplace_back(g.at("name").get<std::string>(), g.at("degree").get<int>());
    std::map<std::string, std::string> diff;
    if (doc.contains("differential"))
      for (const auto& [k, v] : doc.at("differential").items()) diff.emplace(k, v.get<std::string>());
    return makeModel(doc.value("name", std::string{"unnamed"}), gens, diff, 2);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model document: ") + e.what());
  }
}

nlohmann::json modelToJson(const Model& model) {
  nlohmann::json doc;
  doc["format"] = kModelFormat;
  doc["name"] = model.name();
  doc["generators"] = nlohmann::json::array();
  nlohmann::json diff = nlohmann::json::object();
  for (const auto& g : model.generators()) {
    doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    if (!model.differentialOf(g.index).isZero()) diff[g.name] = toString(model.differentialOf(g.index));
  }
  doc["differential"] = diff;
  return doc;
}

Model loadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
  return modelFromJson(doc);
}

}  // namespace hilali
