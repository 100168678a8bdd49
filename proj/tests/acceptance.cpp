// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hilali/cohomology.hpp"
#include "hilali/deformation.hpp"
#include "hilali/errors.hpp"
#include "hilali/koszul_tor.hpp"
#include "hilali/model.hpp"

#include "support/dense_oracle.hpp"
#include "support/random_models.hpp"

namespace fs = std::filesystem;
using namespace hilali;

namespace {

const fs::path kModels = fs::path(HILALI_CORPUS_DIR) / "models";

struct Verdict {
  bool pass = true;
  std::string detail;
};

Model corpusModel(const std::string& name) { return loadModel(kModels / (name + ".model")); }

std::vector<Model> corpusModels() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kModels))
    if (e.path().extension() == ".model") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Model> out;
  for (const auto& f : files) out.push_back(loadModel(f));
  return out;
}

bool usable(const Model& m) { return checkDifferential(m).passed() && classify(m).isMinimal; }

bool certified(const Model& m) {
  if (!usable(m) || !classify(m).isHyperelliptic) return false;
  return certifyElliptic(m).elliptic;
}

std::vector<Model> pureElliptic() {
  std::vector<Model> out;
  for (auto& m : corpusModels())
    if (certified(m) && classify(m).isPure) out.push_back(m);
  return out;
}

long binom(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string dimsText(const std::map<int, std::size_t>& dims) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [k, v] : dims) {
    os << (first ? "" : " ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Verdict exampleIdentities() {
  Model m = corpusModel("exact-powers");
  struct Case {
    const char* source;
    const char* image;
  };
  Verdict v;
  for (Case c : {Case{"x1^4*y1 + x1*y2 - x2*y3", "2*x1^10"}, Case{"x2^2*y1 + x2*y2 - x1^5*y3", "2*x2^4"}}) {
    Element got = m.apply(parseExpression(c.source, m.universe()));
    bool ok = got == parseExpression(c.image, m.universe());
    v.pass = v.pass && ok;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + "d(" + c.source + ") = " + toString(got);
  }
  return v;
}

Verdict exampleNegatives() {
  Model m = corpusModel("exact-powers");
  Universe ring = evenRing(m);
  Verdict v;
  const char* pairs[][2] = {{"y1", "y2"}, {"y1", "y3"}, {"y2", "y3"}};
  for (auto& p : pairs) {
    std::vector<Element> rel;
    for (const char* name : p) rel.push_back(toRing(m.differentialOf(*m.generators().find(name)), ring));
    bool regular = isRegularSequence(ring, rel);
    std::string tag = std::string(p[0]) + p[1];
    EllipticityCertificate cert = certifyElliptic(corpusModel("exact-powers-" + tag));
    if (regular || cert.elliptic) v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + tag + ": regular=" + (regular ? "yes" : "no") +
                " elliptic=" + (cert.elliptic ? "yes" : "no");
  }
  return v;
}

Verdict augmentationTor() {
  Universe empty = makeUniverse({});
  QuotientResult q = quotientBasis(empty, {});
  Verdict v;
  if (!q.finite()) return {false, "Q is not a finite quotient"};
  for (int r = 0; r <= 5; ++r) {
    SModuleStructure s{std::vector<Element>(static_cast<std::size_t>(r), Element::zero(empty))};
    TorTable t = torTable(*q.module, s);
    for (int k = 0; k <= r; ++k)
      if (t.dims.count(k) == 0 || static_cast<long>(t.dims.at(k)) != binom(r, k)) v.pass = false;
    if (t.dims.size() != static_cast<std::size_t>(r + 1)) v.pass = false;
    v.detail += (v.detail.empty() ? "" : " ") + ("r=" + std::to_string(r) + dimsText(t.dims));
  }
  return v;
}

Verdict crossCheck() {
  Verdict v;
  int used = 0;
  double slowest = 0;
  for (const auto& m : pureElliptic()) {
    Classification c = classify(m);
    if (c.n > 3 || m.generators().maxDegree() > 8) continue;
    auto t0 = std::chrono::steady_clock::now();
    CrossCheckReport rep = torViaModelCrossCheck(m);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    ++used;
    if (!rep.passed()) {
      v.pass = false;
      v.detail += m.name() + " disagrees; ";
    }
  }
  if (used < 5) v.pass = false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d models, slowest %.2f s", used, slowest);
  v.detail += buf;
  if (slowest > 300) v.pass = false;
  return v;
}

Verdict torEndBounds() {
  Verdict v;
  int used = 0;
  for (const auto& m : pureElliptic()) {
    Classification c = classify(m);
    HalperinBasis h = halperinBasis(m);
    TorBoundsReport b = torBoundsCheck(h.module, h.structure, c.n);
    ++used;
    if (!b.passed()) {
      v.pass = false;
      v.detail += m.name() + " fails; ";
    }
  }
  v.detail += std::to_string(used) + " pure elliptic models";
  return v;
}

Verdict torSemicontinuity() {
  Verdict v;
  std::size_t runs = 0;
  std::size_t violations = 0;
  for (const auto& m : pureElliptic()) {
    std::size_t n = m.evenGenerators().size();
    for (std::uint64_t seed : {11u, 23u, 47u}) {
      HalperinBasis h = halperinBasis(m, {seed, 64, {}});
      std::vector<Element> base(h.zImages.begin(), h.zImages.begin() + static_cast<std::ptrdiff_t>(n));
      ModuleFamily family = ModuleFamily::linearPerturbation(h.module.ring(), base);
      SemicontinuityReport rep = torSemicontinuityCheck(family, h.structure, 5, seed);
      ++runs;
      violations += rep.violations;
      if (!rep.passed()) {
        v.pass = false;
        v.detail += m.name() + " seed " + std::to_string(seed) + " fails; ";
      }
    }
  }
  v.detail += std::to_string(runs) + " runs, " + std::to_string(violations) + " violations";
  return v;
}

Verdict reductionChain() {
  Verdict v;
  int used = 0;
  for (const auto& m : corpusModels()) {
    if (!certified(m)) continue;
    ReductionReport rep = perturbAndReduce(m, 5, 101);
    ++used;
    if (!rep.passed()) {
      v.pass = false;
      v.detail += m.name() + " fails; ";
    }
  }
  v.detail += std::to_string(used) + " hyperelliptic models";
  return v;
}

Verdict eulerSigns() {
  Verdict v;
  int used = 0;
  for (const auto& m : corpusModels()) {
    if (!certified(m)) continue;
    BettiTable t = completeBetti(m);
    EulerCharacteristics e = eulerCharacteristics(m, t);
    bool ok = e.chi >= 0 && e.chiPi <= 0 && ((e.chiPi < 0) == (e.chi == 0));
    ++used;
    if (!ok) {
      v.pass = false;
      v.detail += m.name() + " chi=" + std::to_string(e.chi) + " chiPi=" + std::to_string(e.chiPi) + "; ";
    }
  }
  v.detail += std::to_string(used) + " certified models";
  return v;
}

Verdict quadricEndgame() {
  Model m = corpusModel("quadrics-n3r3");
  Element a1 = parseExpression("x3*y2*y3 + x1*y3*y5 - x2*y2*y5", m.universe());
  Element a2 = parseExpression("x3*y1*y2 - x2*y1*y4 + x1*y2*y4", m.universe());
  bool cocycles = isCocycle(m, a1) && isCocycle(m, a2);
  bool exact1 = isCoboundary(m, a1);
  bool exact2 = isCoboundary(m, a2);
  HilaliVerdict h = hilaliVerdict(m);
  Verdict v;
  v.pass = cocycles && !(exact1 && exact2) && h.dimH >= 10 && h.dimV == 9;
  v.detail = std::string("cocycles=") + (cocycles ? "yes" : "no") + " exact=(" + (exact1 ? "yes" : "no") + "," +
             (exact2 ? "yes" : "no") + ") dimH=" + std::to_string(h.dimH) + " dimV=" + std::to_string(h.dimV);
  return v;
}

Verdict randomHilali() {
  std::mt19937_64 rng(20261016);
  testing_support::HyperellipticShape shape;
  std::size_t rejected = 0;
  std::size_t maxH = 0;
  std::size_t nonPure = 0;
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 200; ++i) {
    Model m = testing_support::randomEllipticHyperelliptic(rng, shape, "random-" + std::to_string(i), &rejected);
    if (!classify(m).isPure) ++nonPure;
    try {
      HilaliVerdict h = hilaliVerdict(m);
      maxH = std::max(maxH, h.dimH);
      if (!h.holds) {
        v.pass = false;
        v.detail += m.name() + " violates dim V <= dim H; ";
      }
    } catch (const Error& e) {
      v.pass = false;
      v.detail += m.name() + ": " + e.what() + "; ";
    }
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "200 models, %zu not pure, %zu rejected, max dim H %zu, %.1f s", nonPure, rejected,
                maxH, seconds);
  v.detail += buf;
  if (seconds > 900) v.pass = false;
  return v;
}

Verdict oracleEquivalence() {
  std::mt19937_64 rng(7);
  testing_support::HyperellipticShape shape;
  shape.maxDegree = 7;
  Verdict v;
  std::size_t degreesCompared = 0;
  std::size_t notHyperelliptic = 0;
  for (int i = 0; i < 50; ++i) {
    Model m = i % 2 == 0 ? testing_support::randomMinimal(rng, "minimal-" + std::to_string(i))
                         : testing_support::randomHyperelliptic(rng, shape, "hyper-" + std::to_string(i));
    if (!classify(m).isHyperelliptic) ++notHyperelliptic;
    int top = 0;
    while (top < 40 && oracle::monomials(m, top + 1).size() <= 300 && oracle::monomials(m, top + 2).size() <= 300) ++top;
    std::vector<std::size_t> expected = oracle::betti(m, top);
    BettiTable t = betti(m, top);
    for (int p = 0; p <= top; ++p) {
      ++degreesCompared;
      if (t.at(p) != expected[static_cast<std::size_t>(p)]) {
        v.pass = false;
        v.detail += m.name() + " degree " + std::to_string(p) + "; ";
      }
    }
  }
  v.detail += "50 models (" + std::to_string(notHyperelliptic) + " not hyperelliptic), " +
              std::to_string(degreesCompared) + " degrees compared";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact-powers coboundary identities", exampleIdentities},
      {2, "exact-powers pairs not regular, sub-models not elliptic", exampleNegatives},
      {3, "Tor of the augmentation is binomial for r = 0..5", augmentationTor},
      {4, "cohomology and Tor agree on pure elliptic models", crossCheck},
      {5, "Tor end bounds and length bound", torEndBounds},
      {6, "Tor semicontinuity on the linear families", torSemicontinuity},
      {7, "perturbation chain on hyperelliptic models", reductionChain},
      {8, "Euler characteristic signs", eulerSigns},
      {9, "quadric classes and dim H >= 10 >= 9", quadricEndgame},
      {10, "random hyperelliptic models satisfy dim V <= dim H", randomHilali},
      {11, "betti agrees with the dense oracle", oracleEquivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << v.detail << ")"
              << std::endl;
  }
  std::cout << failures << " of " << criteria.size() << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
