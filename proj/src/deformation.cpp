#include "hilali/deformation.hpp"

#include <algorithm>

#include "hilali/errors.hpp"

namespace hilali {

Scalar sampleGenericRational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  long p = 0;
  while (p == 0) p = num(rng);
  Scalar q(p, den(rng));
  q.canonicalize();
  return q;
}

// ----------------------------------------------------------------- families

ModuleFamily::ModuleFamily(Universe ring, std::vector<Element> base, std::vector<Element> perturbation,
                           QuotientOptions options)
    : ring_(std::move(ring)), base_(std::move(base)), perturbation_(std::move(perturbation)), options_(options) {
  if (base_.size() != perturbation_.size()) throw InputError("family needs one perturbation per relation");
}

ModuleFamily ModuleFamily::linearPerturbation(const Universe& ring, const std::vector<Element>& relations,
                                              QuotientOptions options) {
  if (relations.size() != ring->size())
    throw InputError("linear perturbation needs one relation per ring generator");
  std::vector<Element> q;
  for (std::size_t i = 0; i < ring->size(); ++i) q.push_back(Element::generator(ring, i));
  std::vector<Element> base;
  for (const auto& p : relations) base.push_back(toRing(p, ring));
  return ModuleFamily(ring, std::move(base), std::move(q), options);
}

std::vector<Element> ModuleFamily::relationsAt(const Scalar& xi) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < base_.size(); ++i) out.push_back(base_[i] + perturbation_[i] * xi);
  return out;
}

const QuotientResult& ModuleFamily::fiber(const Scalar& xi) const {
  auto it = cache_.find(xi);
  if (it == cache_.end()) it = cache_.emplace(xi, quotientBasis(ring_, relationsAt(xi), options_)).first;
  return it->second;
}

FlatnessReport flatnessCheck(const ModuleFamily& family, int samples, std::uint64_t seed) {
  if (samples < 2) throw InputError("flatness check needs at least 2 samples");
  FlatnessReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Scalar> points{Scalar(0)};
  for (int i = 0; i < samples; ++i) points.push_back(sampleGenericRational(rng));
  std::optional<std::size_t> common;
  report.flat = true;
  for (const auto& xi : points) {
    const QuotientResult& f = family.fiber(xi);
    if (f.status == QuotientStatus::ProbeExhausted) {
      report.indeterminate = true;
      report.flat = false;
      report.lengths.emplace_back(xi, std::nullopt);
      continue;
    }
    std::optional<std::size_t> len;
    if (f.finite()) len = f.module->length();
    report.lengths.emplace_back(xi, len);
    if (!len) {
      report.flat = false;
      continue;
    }
    if (!common) common = len;
    if (*common != *len) report.flat = false;
  }
  report.commonLength = common.value_or(0);
  return report;
}

// ------------------------------------------------------------ reducedness

namespace {

using Polynomial = std::vector<Scalar>;  // coefficient of t^k at k

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

std::size_t gcdDegree(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

bool isReduced(const QuotientModule& m, std::uint64_t seed) {
  const std::size_t len = m.length();
  if (len == 0) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1000, 1000);
  Matrix form(len, len);
  for (std::size_t j = 0; j < m.ring()->size(); ++j) {
    const Scalar c = entry(rng);
    form = form + [&] {
      Matrix t = m.action(j);
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = 0; b < len; ++b) t(a, b) *= c;
      return t;
    }();
  }

  // Krylov sequence from the unit; a relation among the first len + 1
  // vectors gives the characteristic polynomial when the unit is cyclic.
  std::vector<RationalRow> krylov;
  std::vector<Scalar> v = m.unitVector();
  for (std::size_t k = 0; k <= len; ++k) {
    RationalRow row;
    for (std::size_t i = 0; i < len; ++i)
      if (v[i] != 0) row.emplace_back(i, v[i]);
    krylov.push_back(std::move(row));
    v = form.apply(v);
  }
  const auto kernel = leftKernel(krylov, len);
  if (kernel.size() != 1 || kernel.front().back().first != len) return false;
  Polynomial chi(len + 1);
  for (const auto& [k, c] : kernel.front()) chi[k] = c;
  Polynomial derivative;
  for (std::size_t k = 1; k < chi.size(); ++k) derivative.push_back(chi[k] * Scalar(static_cast<long>(k)));
  return gcdDegree(chi, derivative) == 0;
}

SemicontinuityReport torSemicontinuityCheck(const ModuleFamily& family, const SModuleStructure& s, int samples,
                                            std::uint64_t seed) {
  SemicontinuityReport report;
  report.seed = seed;
  const QuotientResult& special = family.fiber(Scalar(0));
  if (!special.finite()) {
    report.indeterminate = true;
    return report;
  }
  std::vector<Element> parameters;
  for (const auto& p : s.parameters) parameters.push_back(toRing(p, family.ring()));
  const SModuleStructure structure{parameters};
  report.special = torTable(*special.module, structure);
  const int r = report.special.r;

  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    FiberTor f;
    f.xi = sampleGenericRational(rng);
    const QuotientResult& q = family.fiber(f.xi);
    if (!q.finite()) {
      report.indeterminate = true;
      continue;
    }
    f.tor = torTable(*q.module, structure);
    f.reduced = isReduced(*q.module, seed + static_cast<std::uint64_t>(i));
    f.binomial = true;
    std::size_t b = 1;
    for (int k = 0; k <= r; ++k) {
      if (k > 0) b = b * static_cast<std::size_t>(r - k + 1) / static_cast<std::size_t>(k);
      if (f.tor.dims[k] != b) f.binomial = false;
      if (f.reduced && f.tor.dims[k] != b * f.tor.dims[0]) f.pointCount = false;
      if (r >= 1 && f.tor.dims[k] < b) f.originBound = false;
      if (f.tor.dims[k] > report.special.dims[k]) f.dominated = false;
    }
    if (!f.dominated) ++report.violations;
    if (!f.pointCount || !f.originBound) ++report.patternMismatches;
    if (f.binomial) ++report.binomialFibers;
    report.fibers.push_back(std::move(f));
  }
  return report;
}

// ------------------------------------------------------------ perturbation

namespace {

std::string freshName(const GeneratorList& gens, const std::string& stem) {
  std::string name = stem;
  for (int k = 2; gens.find(name); ++k) name = stem + std::to_string(k);
  return name;
}

std::vector<Element> imagesIn(const Model& model, const Universe& target) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < model.dimV(); ++i) out.push_back(toRing(model.differentialOf(i), target));
  return out;
}

}  // namespace

PerturbedModel::PerturbedModel(const Model& base, std::size_t evenIndex) : base_(base), evenIndex_(evenIndex) {
  const auto& gens = base.generators();
  if (evenIndex >= gens.size() || gens.isOdd(evenIndex)) throw InputError("perturbation needs an even generator");
  xName_ = gens[evenIndex].name;
  barName_ = freshName(gens, xName_ + "bar");
  auto specs = gens.specs();
  specs.emplace_back(barName_, gens[evenIndex].degree - 1);
  const Universe w = makeUniverse(specs, 1);

  std::vector<Element> d = imagesIn(base, w);
  d.emplace_back(w);
  tensor_ = Model(base.name() + "+" + barName_, w, d);

  std::vector<Element> delta(w->size(), Element(w));
  delta.back() = Element::generator(w, *w->find(xName_));
  delta_ = Model("delta", w, std::move(delta));
}

Model PerturbedModel::at(const Scalar& xi) const {
  const Universe& w = tensor_.universe();
  std::vector<Element> d;
  for (std::size_t i = 0; i < w->size(); ++i) d.push_back(tensor_.differentialOf(i) + delta_.differentialOf(i) * xi);
  return Model(tensor_.name() + "@" + toString(xi), w, std::move(d));
}

Model PerturbedModel::quotientModel() const {
  const auto& gens = base_.generators();
  std::vector<std::pair<std::string, int>> specs;
  for (const auto& g : gens)
    if (g.index != evenIndex_) specs.emplace_back(g.name, g.degree);
  const Universe u = makeUniverse(specs, 1);
  std::vector<Element> d;
  for (const auto& g : gens)
    if (g.index != evenIndex_) d.push_back(toRing(dropTermsWith(base_.differentialOf(g.index), evenIndex_), u));
  return Model(base_.name() + "/" + xName_, u, std::move(d));
}

namespace {

std::vector<Element> probeElements(const Model& tensor, const std::string& barName) {
  const Universe& w = tensor.universe();
  const std::size_t bar = *w->find(barName);
  std::vector<Element> out;
  for (std::size_t i = 0; i < w->size(); ++i) {
    out.push_back(Element::generator(w, i));
    if (i != bar) out.push_back(Element::generator(w, bar) * Element::generator(w, i));
  }
  return out;
}

}  // namespace

bool PerturbedModel::anticommutes() const {
  for (const auto& e : probeElements(tensor_, barName_))
    if (!(tensor_.apply(delta_.apply(e)) + delta_.apply(tensor_.apply(e))).isZero()) return false;
  return true;
}

bool PerturbedModel::strictlyCommutes() const {
  for (const auto& e : probeElements(tensor_, barName_))
    if (!tensor_.apply(delta_.apply(e)).isZero() || !delta_.apply(tensor_.apply(e)).isZero()) return false;
  return true;
}

bool ReductionReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed()) return false;
  return terminalZeroDifferential && terminalOk && chainOk && powerBound;
}

namespace {

std::size_t totalCohomology(const Model& model, bool& complete) {
  const BettiTable t = completeBetti(model);
  if (!t.complete) complete = false;
  return t.totalDim;
}

}  // namespace

ReductionReport perturbAndReduce(const Model& model, int samples, std::uint64_t seed) {
  const Classification c = classify(model);
  if (!c.isHyperelliptic) throw InputError("model '" + model.name() + "' is not hyperelliptic");
  const auto cert = certifyElliptic(model);
  if (!cert.elliptic) throw InputError("model '" + model.name() + "' is not certified elliptic");
  if (samples < 1) throw InputError("reduction needs at least one sample");

  ReductionReport report;
  report.seed = seed;
  report.n = c.n;
  report.r = c.r;
  bool complete = true;
  report.dimH = totalCohomology(model, complete);
  std::mt19937_64 rng(seed);

  Model current = model;
  std::size_t dimCurrent = report.dimH;
  while (!current.evenGenerators().empty()) {
    std::size_t pick = current.evenGenerators().front();
    for (auto i : current.evenGenerators())
      if (current.generators()[i].degree < current.generators()[pick].degree) pick = i;
    const PerturbedModel p(current, pick);

    ReductionStep step;
    step.generator = p.generatorName();
    step.generatorDegree = current.generators()[pick].degree;
    step.dimCurrent = dimCurrent;
    step.anticommutes = p.anticommutes();
    step.strictlyCommutes = p.strictlyCommutes();
    step.dimTensor = totalCohomology(p.tensorModel(), complete);
    step.doubling = step.dimTensor == 2 * dimCurrent;
    const Model next = p.quotientModel();
    step.dimQuotient = totalCohomology(next, complete);
    for (int s = 0; s < samples; ++s) {
      const Scalar xi = sampleGenericRational(rng);
      const Model perturbed = p.at(xi);
      if (!checkDifferential(perturbed).passed()) step.squareZero = false;
      const std::size_t dim = totalCohomology(perturbed, complete);
      step.xis.push_back(xi);
      step.dimPerturbed.push_back(dim);
      if (dim != step.dimQuotient) step.collapse = false;
      if (dim > step.dimTensor) step.semicontinuity = false;
    }
    report.steps.push_back(std::move(step));
    current = next;
    dimCurrent = report.steps.back().dimQuotient;
  }

  report.terminalZeroDifferential = true;
  for (std::size_t i = 0; i < current.dimV(); ++i)
    if (!current.differentialOf(i).isZero()) report.terminalZeroDifferential = false;
  report.terminalDim = dimCurrent;
  const int odd = c.nPlusR;
  report.terminalOk = odd < 63 && report.terminalDim == (std::size_t{1} << odd);
  if (odd < 63 && c.r >= 0 && c.r < 63) {
    const Integer lhs = Integer(static_cast<unsigned long>(report.dimH)) << c.n;
    report.chainOk = lhs >= Integer(1) << odd;
    report.powerBound = report.dimH >= (std::size_t{1} << c.r);
  }
  if (!complete)
    throw ContradictionError("cohomology of an elliptic model in the reduction of '" + model.name() +
                             "' does not vanish above its formal dimension");
  return report;
}

}  // namespace hilali
