#include "hilali/cohomology.hpp"

#include <algorithm>
#include <unordered_map>

#include "hilali/errors.hpp"

namespace hilali {

namespace {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonomialIndex indexOf(const std::vector<Monomial>& monomials) {
  MonomialIndex index;
  index.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  return index;
}

RationalRow rowOf(const Element& e, const MonomialIndex& index) {
  RationalRow row;
  row.reserve(e.termCount());
  for (const auto& [m, c] : e.terms()) row.emplace_back(index.at(m), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<RationalRow> imageRows(const Model& model, const std::vector<Monomial>& source,
                                   const std::vector<Monomial>& target) {
  const MonomialIndex index = indexOf(target);
  std::vector<RationalRow> rows;
  rows.reserve(source.size());
  for (const auto& m : source) rows.push_back(rowOf(model.applyToMonomial(m), index));
  return rows;
}

Element elementOf(const Universe& u, const std::vector<Monomial>& monomials, const RationalRow& row) {
  Element e(u);
  for (const auto& [i, c] : row) e.addTerm(monomials[i], c);
  return e;
}

int maxGeneratorDegree(const Model& model) {
  return model.dimV() ? model.generators().maxDegree() : 0;
}

}  // namespace

DifferentialBlock differentialBlock(const Model& model, int degree) {
  DifferentialBlock block;
  if (degree >= 0) block.source = basis(model.generators(), degree);
  block.target = basis(model.generators(), degree + 1);
  block.rows = imageRows(model, block.source, block.target);
  return block;
}

std::size_t BettiTable::at(int degree) const {
  auto it = dims.find(degree);
  return it == dims.end() ? 0 : it->second;
}

BettiTable betti(const Model& model, int maxDegree) {
  BettiTable table;
  table.maxDegreeComputed = maxDegree;
  table.formalDimension = formalDimension(model);
  const auto& gens = model.generators();
  std::vector<Monomial> current = basis(gens, 0);
  std::size_t rankIn = 0;
  for (int p = 0; p <= maxDegree; ++p) {
    std::vector<Monomial> next = basis(gens, p + 1);
    const std::size_t rankOut = current.empty() ? 0 : rank(imageRows(model, current, next), next.size());
    DegreeRow row{p, current.size(), rankOut, current.size() - rankOut - rankIn};
    if (row.betti) table.dims[p] = row.betti;
    table.totalDim += row.betti;
    table.rows.push_back(row);
    rankIn = rankOut;
    current = std::move(next);
  }
  return table;
}

int formalDimension(const Model& model) {
  int n = 0;
  for (const auto& g : model.generators()) n += g.odd() ? g.degree : -(g.degree - 1);
  return n;
}

BettiTable completeBetti(const Model& model, std::optional<int> maxDegree) {
  const int bound = formalDimension(model);
  const int window = std::max(bound, 0) + maxGeneratorDegree(model);
  BettiTable table = betti(model, std::max(window, maxDegree.value_or(0)));
  table.complete = true;
  for (const auto& [p, d] : table.dims)
    if (p > bound && p <= window) table.complete = false;
  return table;
}

EulerCharacteristics eulerCharacteristics(const Model& model, const BettiTable& table) {
  if (!table.complete) throw InputError("Euler characteristic needs a complete cohomology table");
  EulerCharacteristics e;
  for (const auto& [p, d] : table.dims) e.chi += (p % 2 ? -1L : 1L) * static_cast<long>(d);
  e.chiPi = static_cast<long>(model.evenGenerators().size()) - static_cast<long>(model.oddGenerators().size());
  return e;
}

EllipticityCertificate certifyElliptic(const Model& model, const QuotientOptions& options) {
  const Classification c = classify(model);
  if (!c.isHyperelliptic) throw InputError("model '" + model.name() + "' is not hyperelliptic");
  const Model pure = purePart(model);
  const Universe ring = evenRing(model);
  std::vector<Element> relations;
  for (auto j : model.oddGenerators()) relations.push_back(toRing(pure.differentialOf(j), ring));

  EllipticityCertificate cert;
  cert.formalDimensionBound = formalDimension(model);
  const QuotientResult q = quotientBasis(ring, relations, options);
  switch (q.status) {
    case QuotientStatus::Finite:
      cert.status = EllipticStatus::Elliptic;
      cert.evidence = "pure part quotient has length " + std::to_string(q.module->length()) + " (" +
                      q.module->certificate() + ")";
      break;
    case QuotientStatus::NotFinite:
      cert.status = c.isPure ? EllipticStatus::NotElliptic : EllipticStatus::NotCertified;
      cert.evidence = "pure part quotient is infinite: " + q.diagnostic;
      break;
    case QuotientStatus::ProbeExhausted:
      cert.status = EllipticStatus::NotCertified;
      cert.evidence = q.diagnostic;
      break;
  }
  cert.elliptic = cert.status == EllipticStatus::Elliptic;
  return cert;
}

const char* toString(VerdictBranch branch) {
  switch (branch) {
    case VerdictBranch::LengthBound: return "length-bound";
    case VerdictBranch::LowCorank: return "low-corank";
    case VerdictBranch::QuadraticCount: return "quadratic-count";
    case VerdictBranch::PowerOfTwo: return "power-of-two";
    case VerdictBranch::FullComputation: return "full-computation";
  }
  return "?";
}

std::size_t quadraticClassCount(const Model& model) {
  const auto& gens = model.generators();
  const auto evens = model.evenGenerators();
  std::map<int, std::vector<Monomial>> quadratics;
  for (std::size_t a = 0; a < evens.size(); ++a)
    for (std::size_t b = a; b < evens.size(); ++b) {
      const Monomial m =
          multiply(gens, Monomial::generator(gens, evens[a]), Monomial::generator(gens, evens[b]))->second;
      quadratics[m.degree()].push_back(m);
    }
  std::size_t count = 0;
  for (const auto& [p, monomials] : quadratics) {
    const DifferentialBlock block = differentialBlock(model, p - 1);
    const MonomialIndex index = indexOf(block.target);
    Echelon e(block.target.size());
    for (const auto& row : block.rows)
      if (!row.empty()) e.insert(row);
    const std::size_t before = e.rank();
    for (const auto& m : monomials) e.insert(RationalRow{{index.at(m), Scalar(1)}});
    count += e.rank() - before;
  }
  return count;
}

HilaliVerdict hilaliVerdict(const Model& model, const VerdictOptions& options) {
  if (!checkDifferential(model).passed()) throw InputError("model '" + model.name() + "' fails d^2 = 0");
  const Classification c = classify(model);
  if (!c.isMinimal) throw InputError("model '" + model.name() + "' is not minimal");

  HilaliVerdict v;
  v.n = c.n;
  v.r = c.r;
  v.dimV = model.dimV();
  if (c.isHyperelliptic) {
    v.certificate = certifyElliptic(model);
  } else if (!options.assumeElliptic) {
    throw InputError("model '" + model.name() + "' is not hyperelliptic; ellipticity must be assumed");
  }
  if (!v.certificate.elliptic && !options.assumeElliptic) {
    if (v.certificate.status == EllipticStatus::NotElliptic)
      throw InputError("model '" + model.name() + "' is not elliptic: " + v.certificate.evidence);
    throw IndeterminateError("ellipticity of '" + model.name() + "' not certified: " + v.certificate.evidence);
  }
  if (!v.certificate.elliptic) {
    v.certificate.formalDimensionBound = formalDimension(model);
    v.certificate.evidence = "assumed";
  }

  v.table = completeBetti(model, options.maxDegree);
  if (!v.table.complete) {
    if (v.certificate.elliptic)
      throw ContradictionError("cohomology of elliptic model '" + model.name() +
                               "' does not vanish above its formal dimension");
    throw IndeterminateError("cohomology of '" + model.name() + "' does not vanish above the formal dimension");
  }
  v.dimH = v.table.totalDim;
  v.holds = v.dimV <= v.dimH;
  v.euler = eulerCharacteristics(model, v.table);
  v.chiNonNegative = v.euler.chi >= 0;
  v.chiPiNonPositive = v.euler.chiPi <= 0;
  v.signEquivalence = (v.euler.chiPi < 0) == (v.euler.chi == 0);

  const std::size_t n = static_cast<std::size_t>(c.n);
  if (!c.isHyperelliptic) {
    v.branch = VerdictBranch::FullComputation;
    v.branchBound = 0;
  } else if (c.r == 0) {
    v.branch = VerdictBranch::LengthBound;
    v.branchBound = 2 * n;
  } else if (c.r <= 2) {
    v.branch = VerdictBranch::LowCorank;
    v.branchBound = 2 * (n + 1);
  } else {
    const long quad = static_cast<long>(n * (n + 1) / 2) - c.n - c.r;
    if (2 * (1 + c.n + quad) >= 2L * c.n + c.r) {
      v.branch = VerdictBranch::QuadraticCount;
      v.quadraticClasses = quadraticClassCount(model);
      v.branchBound = 2 * (1 + n + *v.quadraticClasses);
    } else if (c.r < 63 && (1L << c.r) >= 2L * c.n + c.r) {
      v.branch = VerdictBranch::PowerOfTwo;
      v.branchBound = std::size_t{1} << c.r;
    } else {
      v.branch = VerdictBranch::FullComputation;
      v.branchBound = 2 * n + static_cast<std::size_t>(c.r) + 1;
    }
  }
  v.branchConsistent = v.branchBound <= v.dimH;
  return v;
}

std::vector<Element> cocycleBasis(const Model& model, int degree) {
  const DifferentialBlock block = differentialBlock(model, degree);
  std::vector<Element> out;
  for (const auto& k : leftKernel(block.rows, block.target.size()))
    out.push_back(elementOf(model.universe(), block.source, k));
  return out;
}

std::vector<Element> coboundaryBasis(const Model& model, int degree) {
  const DifferentialBlock block = differentialBlock(model, degree - 1);
  std::vector<Element> out;
  for (const auto& row : rowSpaceBasis(block.rows, block.target.size()))
    out.push_back(elementOf(model.universe(), block.target, row));
  return out;
}

bool isCocycle(const Model& model, const Element& e) { return model.apply(e).isZero(); }

bool isCoboundary(const Model& model, const Element& e) {
  if (e.isZero()) return true;
  const auto degree = e.homogeneousDegree();
  if (!degree) throw InputError("coboundary test needs a homogeneous element");
  const DifferentialBlock block = differentialBlock(model, *degree - 1);
  Echelon echelon(block.target.size());
  for (const auto& row : block.rows)
    if (!row.empty()) echelon.insert(row);
  return echelon.contains(rowOf(mapToUniverse(e, model.universe()), indexOf(block.target)));
}

std::map<int, std::size_t> lowerGradedBetti(const Model& model, std::optional<int> maxDegree) {
  if (!classify(model).isPure) throw InputError("lower grading passes to cohomology only for pure models");
  const auto& gens = model.generators();
  const int bound = formalDimension(model);
  const int top = std::max(std::max(bound, 0) + maxGeneratorDegree(model), maxDegree.value_or(0));

  // rank of d on the (p, q) block, which lands in (p + 1, q - 1).
  std::map<int, std::size_t> previousRank;
  std::map<int, std::size_t> result;
  std::vector<Monomial> current = basis(gens, 0);
  for (int p = 0; p <= top; ++p) {
    std::vector<Monomial> next = basis(gens, p + 1);
    const MonomialIndex index = indexOf(next);
    std::map<int, std::vector<RationalRow>> rowsByQ;
    std::map<int, std::size_t> countByQ;
    for (const auto& m : current) {
      const int q = m.oddCount(gens);
      ++countByQ[q];
      rowsByQ[q].push_back(rowOf(model.applyToMonomial(m), index));
    }
    std::map<int, std::size_t> rankByQ;
    for (const auto& [q, rows] : rowsByQ) rankByQ[q] = rank(rows, next.size());
    for (const auto& [q, count] : countByQ) {
      const std::size_t in = previousRank.count(q + 1) ? previousRank[q + 1] : 0;
      const std::size_t d = count - rankByQ[q] - in;
      if (d) result[q] += d;
    }
    previousRank = std::move(rankByQ);
    current = std::move(next);
  }
  return result;
}

}  // namespace hilali
