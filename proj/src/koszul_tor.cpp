#include "hilali/koszul_tor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "hilali/cohomology.hpp"
#include "hilali/errors.hpp"

namespace hilali {

namespace {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

int topDegree(const Element& e) {
  int top = 0;
  for (const auto& [m, c] : e.terms()) top = std::max(top, m.degree());
  return top;
}

Element topForm(const Element& e) {
  const int top = topDegree(e);
  Element out(e.universe());
  for (const auto& [m, c] : e.terms())
    if (m.degree() == top) out.addTerm(m, c);
  return out;
}

// Σ (deg P - 1) - Σ (w - 1): H of the pure model on these relations, hence
// the quotient, vanishes above it when finite.
int degreeBound(const GeneratorList& ring, const std::vector<Element>& relations) {
  int bound = 0;
  for (const auto& p : relations) bound += topDegree(p) - 1;
  for (const auto& g : ring) bound -= g.degree - 1;
  return bound;
}

// m * P as a sparse row over `index`; terms landing outside the index are an
// error of the caller.
RationalRow productRow(const GeneratorList& ring, const Monomial& m, const Element& p,
                       const MonomialIndex& index) {
  RationalRow row;
  row.reserve(p.termCount());
  for (const auto& [t, c] : p.terms()) {
    auto prod = multiply(ring, m, t);
    row.emplace_back(index.at(prod->second), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

// Normal forms modulo the rows of a reduced echelon basis: a pivot column is
// rewritten as minus the rest of its row.
struct NormalForms {
  std::vector<RationalRow> rref;
  std::vector<long> rowOfPivot;

  void build(const std::vector<RationalRow>& rows, std::size_t columns) {
    Echelon e(columns);
    for (const auto& r : rows)
      if (!r.empty()) e.insert(r);
    rref = e.reducedBasis();
    rowOfPivot.assign(columns, -1);
    for (std::size_t i = 0; i < rref.size(); ++i) rowOfPivot[rref[i].front().first] = static_cast<long>(i);
  }

  bool isPivot(std::size_t c) const { return rowOfPivot[c] >= 0; }

  RationalRow of(std::size_t c) const {
    if (!isPivot(c)) return {{c, Scalar(1)}};
    const auto& row = rref[static_cast<std::size_t>(rowOfPivot[c])];
    RationalRow out;
    out.reserve(row.size() - 1);
    for (std::size_t k = 1; k < row.size(); ++k) out.emplace_back(row[k].first, -row[k].second);
    return out;
  }
};

std::vector<Scalar> matVec(const Matrix& a, const std::vector<Scalar>& v) { return a.apply(v); }

}  // namespace

// Friend of QuotientModule: assembles certified modules.
struct QuotientBuilder {
  static QuotientModule make(Universe ring, std::vector<Element> relations, std::vector<Monomial> basis,
                             std::vector<Matrix> actions, std::vector<Scalar> unit, bool graded,
                             std::string certificate) {
    QuotientModule m;
    m.ring_ = std::move(ring);
    m.relations_ = std::move(relations);
    m.basis_ = std::move(basis);
    m.actions_ = std::move(actions);
    m.unit_ = std::move(unit);
    m.graded_ = graded;
    m.socleDegree_ = 0;
    for (const auto& b : m.basis_) m.socleDegree_ = std::max(m.socleDegree_, b.degree());
    m.certificate_ = std::move(certificate);
    return m;
  }
};

std::map<int, std::size_t> QuotientModule::dimensionsByDegree() const {
  std::map<int, std::size_t> out;
  for (const auto& b : basis_) ++out[b.degree()];
  return out;
}

std::vector<Scalar> QuotientModule::coordinates(const Element& f) const {
  std::vector<Scalar> out(length());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Scalar> v = unit_;
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::uint32_t e = 0; e < m.exponent(j); ++e) v = matVec(actions_[j], v);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out[i] += c * v[i];
  }
  return out;
}

Matrix QuotientModule::multiplication(const Element& f) const {
  const std::size_t len = length();
  Matrix out(len, len);
  std::map<std::pair<std::size_t, std::uint32_t>, Matrix> powers;
  auto power = [&](std::size_t j, std::uint32_t e) -> const Matrix& {
    auto it = powers.find({j, e});
    if (it != powers.end()) return it->second;
    Matrix p = actions_[j];
    for (std::uint32_t k = 1; k < e; ++k) p = p * actions_[j];
    return powers.emplace(std::make_pair(j, e), std::move(p)).first->second;
  };
  for (const auto& [m, c] : f.terms()) {
    Matrix term = Matrix::identity(len);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.exponent(j)) term = term * power(j, m.exponent(j));
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = 0; b < len; ++b)
        if (term(a, b) != 0) out(a, b) += c * term(a, b);
  }
  return out;
}

// ------------------------------------------------------------ quotientBasis

namespace {

QuotientResult gradedQuotient(const Universe& ring, const std::vector<Element>& relations,
                              const std::vector<Element>& nonzero) {
  const auto& gens = *ring;
  QuotientResult result;
  const int bound = degreeBound(gens, nonzero);
  const int w = gens.empty() ? 0 : gens.maxDegree();
  const int top = std::max(bound + w, 0);
  result.probedTo = top;

  struct Piece {
    std::vector<Monomial> monomials;
    MonomialIndex index;
    NormalForms nf;
  };
  std::vector<Piece> pieces(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    Piece& piece = pieces[static_cast<std::size_t>(d)];
    piece.monomials = basis(gens, d);
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], i);
    std::vector<RationalRow> rows;
    for (const auto& p : nonzero) {
      const int pd = topDegree(p);
      if (pd > d) continue;
      for (const auto& m : basis(gens, d - pd)) rows.push_back(productRow(gens, m, p, piece.index));
    }
    piece.nf.build(rows, piece.monomials.size());
    if (d > bound && piece.nf.rref.size() < piece.monomials.size()) {
      result.status = QuotientStatus::NotFinite;
      result.diagnostic = "quotient is nonzero in degree " + std::to_string(d) + " above the bound " +
                          std::to_string(bound);
      return result;
    }
  }

  // Standard monomials in degree order, then column order.
  std::vector<Monomial> standard;
  std::vector<std::vector<long>> global(pieces.size());
  for (std::size_t d = 0; d < pieces.size(); ++d) {
    global[d].assign(pieces[d].monomials.size(), -1);
    for (std::size_t c = 0; c < pieces[d].monomials.size(); ++c)
      if (!pieces[d].nf.isPivot(c)) {
        global[d][c] = static_cast<long>(standard.size());
        standard.push_back(pieces[d].monomials[c]);
      }
  }

  const std::size_t len = standard.size();
  std::vector<Matrix> actions;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Matrix t(len, len);
    const Monomial xj = Monomial::generator(gens, j);
    for (std::size_t i = 0; i < len; ++i) {
      const Monomial prod = multiply(gens, standard[i], xj)->second;
      if (prod.degree() > top) continue;
      const Piece& piece = pieces[static_cast<std::size_t>(prod.degree())];
      for (const auto& [c, v] : piece.nf.of(piece.index.at(prod))) {
        const long g = global[static_cast<std::size_t>(prod.degree())][c];
        t(static_cast<std::size_t>(g), i) = v;
      }
    }
    actions.push_back(std::move(t));
  }
  std::vector<Scalar> unit(len);
  if (len) unit[0] = 1;

  result.status = QuotientStatus::Finite;
  result.module = QuotientBuilder::make(ring, relations, std::move(standard), std::move(actions), std::move(unit),
                                        true,
                                        "graded: vanishes on (" + std::to_string(bound) + ", " +
                                            std::to_string(top) + "]");
  return result;
}

std::optional<QuotientModule> certifyAt(const Universe& ring, const std::vector<Element>& relations,
                                        const std::vector<Element>& nonzero, int level) {
  const auto& gens = *ring;
  const int w = gens.empty() ? 0 : gens.maxDegree();

  // Columns: highest degree first, so pivots are leading forms.
  std::vector<Monomial> columns;
  for (int d = level; d >= 0; --d) {
    auto part = basis(gens, d);
    columns.insert(columns.end(), part.begin(), part.end());
  }
  MonomialIndex index;
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(columns[i], i);

  std::vector<RationalRow> rows;
  for (const auto& p : nonzero) {
    const int pd = topDegree(p);
    for (int d = 0; d + pd <= level; ++d)
      for (const auto& m : basis(gens, d)) rows.push_back(productRow(gens, m, p, index));
  }
  NormalForms nf;
  nf.build(rows, columns.size());

  std::vector<long> position(columns.size(), -1);
  std::vector<Monomial> standard;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (!nf.isPivot(c) && columns[c].degree() <= level - w) {
      position[c] = static_cast<long>(standard.size());
      standard.push_back(columns[c]);
    }
  const std::size_t len = standard.size();

  auto toVector = [&](const RationalRow& row, std::vector<Scalar>& out) {
    for (const auto& [c, v] : row) {
      if (position[c] < 0) return false;
      out[static_cast<std::size_t>(position[c])] = v;
    }
    return true;
  };

  std::vector<Matrix> actions;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Matrix t(len, len);
    const Monomial xj = Monomial::generator(gens, j);
    for (std::size_t i = 0; i < len; ++i) {
      const Monomial prod = multiply(gens, standard[i], xj)->second;
      std::vector<Scalar> col(len);
      if (!toVector(nf.of(index.at(prod)), col)) return std::nullopt;
      t.setColumn(i, col);
    }
    actions.push_back(std::move(t));
  }
  for (std::size_t a = 0; a < actions.size(); ++a)
    for (std::size_t b = a + 1; b < actions.size(); ++b)
      if (!(actions[a] * actions[b] == actions[b] * actions[a])) return std::nullopt;

  std::vector<Scalar> unit(len);
  if (!toVector(nf.of(index.at(Monomial::unit(gens))), unit)) return std::nullopt;

  QuotientModule candidate =
      QuotientBuilder::make(ring, relations, standard, std::move(actions), unit, false,
                            "filtered: closure, commuting actions and cyclic rank at level " + std::to_string(level));
  for (const auto& p : nonzero)
    if (!isZeroVector(candidate.coordinates(p))) return std::nullopt;
  std::vector<RationalRow> images;
  for (const auto& b : standard) {
    const auto v = candidate.coordinates(Element::monomial(ring, b));
    RationalRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) row.emplace_back(i, v[i]);
    images.push_back(std::move(row));
  }
  if (rank(images, len) != len) return std::nullopt;
  return candidate;
}

}  // namespace

QuotientResult quotientBasis(const Universe& ring, const std::vector<Element>& relations,
                             const QuotientOptions& options) {
  const auto& gens = *ring;
  for (const auto& g : gens)
    if (g.odd()) throw InputError("quotient ring generator '" + g.name + "' has odd degree");
  std::vector<Element> nonzero;
  bool homogeneous = true;
  for (const auto& p : relations) {
    if (!p.isZero() && !sameUniverse(p.universe(), ring))
      throw UniverseMismatch("relation is not an element of the quotient ring");
    if (p.isZero()) continue;
    Element mapped = mapToUniverse(p, ring);
    if (!mapped.isHomogeneous()) homogeneous = false;
    nonzero.push_back(std::move(mapped));
  }

  QuotientResult result;
  for (const auto& p : nonzero)
    if (p.isHomogeneous() && *p.homogeneousDegree() == 0) {
      // A nonzero constant generates the whole ring.
      result.status = QuotientStatus::Finite;
      std::vector<Matrix> actions(gens.size());
      result.module = QuotientBuilder::make(ring, relations, {}, std::move(actions), {}, homogeneous,
                                            "unit ideal");
      return result;
    }
  if (nonzero.size() < gens.size()) {
    result.status = QuotientStatus::NotFinite;
    result.diagnostic = std::to_string(nonzero.size()) + " nonzero relations in " + std::to_string(gens.size()) +
                        " variables";
    return result;
  }
  if (homogeneous) return gradedQuotient(ring, relations, nonzero);

  std::vector<Element> tops;
  int maxDeg = 0;
  for (const auto& p : nonzero) {
    tops.push_back(topForm(p));
    maxDeg = std::max(maxDeg, topDegree(p));
  }
  const int w = gens.empty() ? 0 : gens.maxDegree();
  const int topBound = degreeBound(gens, tops);
  const int maxProbe = options.maxProbe > 0 ? options.maxProbe : topBound + 2 * maxDeg;
  int step = 0;
  for (const auto& g : gens) step = std::gcd(step, g.degree);
  if (step == 0) step = 1;
  int level = std::min(std::max(maxDeg, topBound + w), maxProbe);
  level = std::max(level, 0);
  for (; level <= maxProbe; level += step) {
    result.probedTo = level;
    auto module = certifyAt(ring, relations, nonzero, level);
    if (!module) continue;
    result.status = QuotientStatus::Finite;
    result.module = std::move(module);
    return result;
  }
  result.status = QuotientStatus::ProbeExhausted;
  result.diagnostic = "no certificate up to filtration degree " + std::to_string(maxProbe);
  return result;
}

Universe evenRing(const Model& model) {
  std::vector<std::pair<std::string, int>> specs;
  for (auto i : model.evenGenerators()) specs.emplace_back(model.generators()[i].name, model.generators()[i].degree);
  return makeUniverse(specs, 1);
}

Element toRing(const Element& e, const Universe& ring) {
  if (e.isZero()) return Element(ring);
  return mapToUniverse(e, ring);
}

bool isRegularSequence(const Universe& ring, const std::vector<Element>& relations, const QuotientOptions& options) {
  if (relations.size() != ring->size())
    throw InputError("regular sequence test needs " + std::to_string(ring->size()) + " relations, got " +
                     std::to_string(relations.size()));
  const auto result = quotientBasis(ring, relations, options);
  if (result.status == QuotientStatus::ProbeExhausted) throw IndeterminateError(result.diagnostic);
  return result.finite();
}

// ---------------------------------------------------------------- Halperin

namespace {

Matrix randomInvertible(std::size_t size, std::mt19937_64& rng, const std::vector<std::size_t>& group) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (group[i] == group[j]) m(i, j) = entry(rng);
    if (m.rank() == size) return m;
  }
}

Matrix permutationMatrix(const std::vector<std::size_t>& order) {
  Matrix m(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) m(i, order[i]) = 1;
  return m;
}

}  // namespace

HalperinBasis halperinBasis(const Model& model, const HalperinOptions& options) {
  if (!classify(model).isPure) throw InputError("model '" + model.name() + "' is not pure");
  const Universe ring = evenRing(model);
  const auto odd = model.oddGenerators();
  const std::size_t total = odd.size();
  const std::size_t n = ring->size();
  if (total < n) throw InputError("model '" + model.name() + "' has fewer odd than even generators");

  std::vector<Element> images;
  for (auto j : odd) images.push_back(toRing(model.differentialOf(j), ring));

  int attempts = 0;
  auto attempt = [&](const Matrix& c, const std::string& strategy) -> std::optional<HalperinBasis> {
    ++attempts;
    std::vector<Element> z;
    for (std::size_t i = 0; i < total; ++i) {
      Element e(ring);
      for (std::size_t k = 0; k < total; ++k)
        if (c(i, k) != 0) e += images[k] * c(i, k);
      z.push_back(std::move(e));
    }
    std::vector<Element> first(z.begin(), z.begin() + static_cast<long>(n));
    auto q = quotientBasis(ring, first, options.quotient);
    if (!q.finite()) return std::nullopt;
    HalperinBasis h;
    h.combination = c;
    h.zImages = z;
    h.module = std::move(*q.module);
    h.structure.parameters.assign(z.begin() + static_cast<long>(n), z.end());
    h.strategy = strategy;
    h.attempts = attempts;
    return h;
  };

  if (auto h = attempt(Matrix::identity(total), "identity")) return *h;

  // Every choice of n generators placed first, in index order.
  std::vector<bool> chosen(total, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(n), true);
  do {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < total; ++i)
      if (chosen[i]) order.push_back(i);
    for (std::size_t i = 0; i < total; ++i)
      if (!chosen[i]) order.push_back(i);
    if (auto h = attempt(permutationMatrix(order), "subset")) return *h;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> byDegree(total), single(total, 0);
  for (std::size_t i = 0; i < total; ++i) byDegree[i] = static_cast<std::size_t>(model.generators()[odd[i]].degree);
  for (int s = 0; s < options.budget; ++s) {
    const bool homogeneous = s < options.budget / 2;
    Matrix c = randomInvertible(total, rng, homogeneous ? byDegree : single);
    if (homogeneous) {
      std::vector<std::size_t> order(total);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      c = permutationMatrix(order) * c;
    }
    if (auto h = attempt(c, homogeneous ? "random homogeneous" : "random")) return *h;
  }
  throw IndeterminateError("no Halperin basis found for '" + model.name() + "' after " + std::to_string(attempts) +
                           " attempts (seed " + std::to_string(options.seed) + ")");
}

// -------------------------------------------------------------------- Tor

namespace {

std::vector<std::vector<unsigned>> subsetsBySize(int r) {
  std::vector<std::vector<unsigned>> out(static_cast<std::size_t>(r) + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask)
    out[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  return out;
}

std::vector<Matrix> parameterActions(const QuotientModule& m, const SModuleStructure& s) {
  std::vector<Matrix> out;
  for (const auto& p : s.parameters) out.push_back(m.multiplication(toRing(p, m.ring())));
  return out;
}

// Rows: images of the basis of C_k, columns: C_{k-1}.
std::vector<RationalRow> koszulRows(std::size_t length, const std::vector<Matrix>& actions,
                                    const std::vector<std::vector<unsigned>>& subsets, int k) {
  std::map<unsigned, std::size_t> targetIndex;
  const auto& targets = subsets[static_cast<std::size_t>(k - 1)];
  for (std::size_t i = 0; i < targets.size(); ++i) targetIndex[targets[i]] = i;
  std::vector<RationalRow> rows;
  for (unsigned mask : subsets[static_cast<std::size_t>(k)]) {
    for (std::size_t v = 0; v < length; ++v) {
      RationalRow row;
      int l = 0;
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        const std::size_t base = targetIndex.at(mask & ~(1u << i)) * length;
        for (std::size_t w = 0; w < length; ++w) {
          const Scalar& a = actions[i](w, v);
          if (a != 0) row.emplace_back(base + w, l % 2 ? Scalar(-a) : a);
        }
        ++l;
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return b;
}

}  // namespace

Matrix koszulDifferential(const QuotientModule& m, const SModuleStructure& s, int k) {
  const int r = static_cast<int>(s.parameterCount());
  const std::size_t len = m.length();
  const std::size_t sourceDim = len * binomial(r, k);
  const std::size_t targetDim = len * binomial(r, k - 1);
  Matrix out(targetDim, sourceDim);
  if (k < 1 || k > r) return out;
  const auto rows = koszulRows(len, parameterActions(m, s), subsetsBySize(r), k);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (const auto& [i, v] : rows[j]) out(i, j) = v;
  return out;
}

TorTable torTable(const QuotientModule& m, const SModuleStructure& s) {
  TorTable t;
  t.r = static_cast<int>(s.parameterCount());
  const std::size_t len = m.length();
  const auto actions = parameterActions(m, s);
  const auto subsets = subsetsBySize(t.r);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(t.r) + 2, 0);
  for (int k = 1; k <= t.r; ++k)
    ranks[static_cast<std::size_t>(k)] =
        rank(koszulRows(len, actions, subsets, k), len * binomial(t.r, k - 1));
  for (int k = 0; k <= t.r; ++k) {
    const std::size_t chain = len * binomial(t.r, k);
    const std::size_t d = chain - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
    t.dims[k] = d;
    t.total += d;
  }
  return t;
}

TorBoundsReport torBoundsCheck(const QuotientModule& m, const SModuleStructure& s, int n) {
  TorBoundsReport report;
  report.n = n;
  report.r = static_cast<int>(s.parameterCount());
  report.length = m.length();
  const TorTable t = torTable(m, s);
  const std::size_t need = static_cast<std::size_t>(n) + 1;
  report.firstOk = t.dims.at(0) >= need;
  report.lastOk = t.dims.at(report.r) >= need;
  if (report.r == 0) report.lengthOk = m.length() >= 2 * static_cast<std::size_t>(n);
  return report;
}

// ---------------------------------------------------------------- pairing

PairingReport dualityPairing(const QuotientModule& m, std::uint64_t seed) {
  PairingReport report;
  const std::size_t len = m.length();
  const std::size_t vars = m.ring()->size();
  if (len == 0) {
    report.detail = "zero module";
    return report;
  }

  // Socle: common kernel of the actions.
  std::vector<RationalRow> stacked(len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < vars; ++j)
      for (std::size_t a = 0; a < len; ++a)
        if (m.action(j)(a, i) != 0) stacked[i].emplace_back(j * len + a, m.action(j)(a, i));
  report.socleDimension = leftKernel(stacked, vars * len).size();

  std::vector<Scalar> functional(len);
  if (m.graded()) {
    std::size_t top = len;
    for (std::size_t i = 0; i < len; ++i)
      if (m.standardBasis()[i].degree() == m.socleDegree()) top = top == len ? i : len + 1;
    if (top >= len) {
      report.detail = "top degree is not one-dimensional";
      return report;
    }
    functional[top] = 1;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-1000, 1000);
    for (auto& f : functional) f = entry(rng);
  }

  // gram[i][k] = φ(b_i b_k): φ transported along the factors of b_i.
  Matrix gram(len, len);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Scalar> psi = functional;
    const Monomial& b = m.standardBasis()[i];
    for (std::size_t j = 0; j < vars; ++j)
      for (std::uint32_t e = 0; e < b.exponent(j); ++e) {
        std::vector<Scalar> next(len);
        const Matrix& t = m.action(j);
        for (std::size_t a = 0; a < len; ++a) {
          if (psi[a] == 0) continue;
          for (std::size_t c = 0; c < len; ++c)
            if (t(a, c) != 0) next[c] += psi[a] * t(a, c);
        }
        psi = std::move(next);
      }
    for (std::size_t k = 0; k < len; ++k) gram(i, k) = psi[k];
  }

  if (m.graded()) {
    report.nondegenerate = true;
    const auto dims = m.dimensionsByDegree();
    for (const auto& [a, size] : dims) {
      const int b = m.socleDegree() - a;
      auto it = dims.find(b);
      if (it == dims.end() || it->second != size) {
        report.nondegenerate = false;
        report.detail = "degrees " + std::to_string(a) + " and " + std::to_string(b) + " differ in dimension";
        break;
      }
      std::vector<RationalRow> block;
      for (std::size_t i = 0; i < len; ++i) {
        if (m.standardBasis()[i].degree() != a) continue;
        RationalRow row;
        std::size_t col = 0;
        for (std::size_t k = 0; k < len; ++k) {
          if (m.standardBasis()[k].degree() != b) continue;
          if (gram(i, k) != 0) row.emplace_back(col, gram(i, k));
          ++col;
        }
        block.push_back(std::move(row));
      }
      if (rank(block, size) != size) {
        report.nondegenerate = false;
        report.detail = "pairing degenerate in degree " + std::to_string(a);
        break;
      }
    }
  } else {
    report.nondegenerate = gram.rank() == len;
    if (!report.nondegenerate) report.detail = "random functional gives a degenerate form";
  }
  report.perfect = report.socleDimension == 1 && report.nondegenerate;
  if (report.socleDimension != 1 && report.detail.empty())
    report.detail = "socle has dimension " + std::to_string(report.socleDimension);
  return report;
}

// ------------------------------------------------------------ cross-check

CrossCheckReport torViaModelCrossCheck(const Model& model, const HalperinOptions& options) {
  const auto cert = certifyElliptic(model, options.quotient);
  if (!cert.elliptic) throw InputError("model '" + model.name() + "' is not certified elliptic");
  CrossCheckReport report;
  const HalperinBasis h = halperinBasis(model, options);
  report.strategy = h.strategy;
  report.tor = torTable(h.module, h.structure);
  const BettiTable table = completeBetti(model);
  if (!table.complete) throw ContradictionError("cohomology of elliptic model '" + model.name() +
                                                "' does not vanish above its formal dimension");
  report.dimH = table.totalDim;
  report.lowerGraded = lowerGradedBetti(model);
  report.totalsAgree = report.dimH == report.tor.total;
  report.gradingAgree = true;
  std::map<int, std::size_t> lower;
  for (const auto& [q, d] : report.lowerGraded)
    if (d) lower[q] = d;
  std::map<int, std::size_t> tor;
  for (const auto& [k, d] : report.tor.dims)
    if (d) tor[k] = d;
  report.gradingAgree = lower == tor;
  return report;
}

}  // namespace hilali
