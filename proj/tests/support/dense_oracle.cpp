#include "dense_oracle.hpp"

#include <map>
#include <utility>

namespace oracle {

using hilali::Scalar;

namespace {

struct Gen {
  int degree;
  bool odd;
};

std::vector<Gen> gens(const hilali::Model& model) {
  std::vector<Gen> out;
  for (const auto& g : model.generators()) out.push_back({g.degree, g.degree % 2 != 0});
  return out;
}

void enumerate(const std::vector<Gen>& g, std::size_t i, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (i == g.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  std::uint32_t maxExp = g[i].odd ? 1u : static_cast<std::uint32_t>(remaining / g[i].degree);
  for (std::uint32_t e = 0; e <= maxExp && static_cast<int>(e) * g[i].degree <= remaining; ++e) {
    cur[i] = e;
    enumerate(g, i + 1, remaining - static_cast<int>(e) * g[i].degree, cur, out);
  }
  cur[i] = 0;
}

using Word = std::vector<std::size_t>;

Word wordOf(const Exponents& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::uint32_t k = 0; k < e[i]; ++k) w.push_back(i);
  return w;
}

/// Sorts a word into index order, tracking the sign of swapping odd letters.
/// Returns 0 when an odd letter repeats.
int normalize(const std::vector<Gen>& g, Word& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      if (g[w[j - 1]].odd && g[w[j]].odd) sign = -sign;
      std::swap(w[j - 1], w[j]);
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && g[w[i]].odd) return 0;
  return sign;
}

Exponents exponentsOf(const Word& w, std::size_t n) {
  Exponents e(n, 0);
  for (std::size_t i : w) ++e[i];
  return e;
}

}  // namespace

std::vector<Exponents> monomials(const hilali::Model& model, int degree) {
  auto g = gens(model);
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(g.size(), 0);
  enumerate(g, 0, degree, cur, out);
  return out;
}

std::vector<std::vector<Scalar>> differentialMatrix(const hilali::Model& model, int degree) {
  auto g = gens(model);
  auto src = monomials(model, degree);
  auto dst = monomials(model, degree + 1);
  std::map<Exponents, std::size_t> column;
  for (std::size_t j = 0; j < dst.size(); ++j) column[dst[j]] = j;

  std::vector<std::vector<Scalar>> rows(src.size(), std::vector<Scalar>(dst.size()));
  for (std::size_t r = 0; r < src.size(); ++r) {
    Word w = wordOf(src[r]);
    int before = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      int prefixSign = (before % 2 != 0) ? -1 : 1;
      for (const auto& [mono, coeff] : model.differentialOf(w[p]).terms()) {
        Word term(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        Word image = wordOf(mono.exponents());
        term.insert(term.end(), image.begin(), image.end());
        term.insert(term.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
        int s = normalize(g, term);
        if (s == 0) continue;
        rows[r][column.at(exponentsOf(term, g.size()))] += coeff * (s * prefixSign);
      }
      before += g[w[p]].degree;
    }
  }
  return rows;
}

std::size_t denseRank(std::vector<std::vector<Scalar>> a) {
  std::size_t rank = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Scalar f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> betti(const hilali::Model& model, int maxDegree) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(maxDegree) + 1);
  for (int p = 0; p <= maxDegree; ++p) ranks[p] = denseRank(differentialMatrix(model, p));
  std::vector<std::size_t> out;
  for (int p = 0; p <= maxDegree; ++p) {
    std::size_t dim = monomials(model, p).size();
    std::size_t in = p > 0 ? ranks[p - 1] : 0;
    out.push_back(dim - ranks[p] - in);
  }
  return out;
}

}  // namespace oracle
