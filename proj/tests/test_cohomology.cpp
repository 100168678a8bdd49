#include "doctest.h"

#include "hilali/cohomology.hpp"
#include "hilali/errors.hpp"

#include "support/dense_oracle.hpp"
#include "support/fixtures.hpp"

using namespace hilali;
using fixtures::corpusModel;
using fixtures::expr;

namespace {

using Dims = std::map<int, std::size_t>;

// n = 4, r = 3 with seven quadrics; x2 x3, x2 x4, x3 x4 survive in H^4.
Model sevenQuadrics() {
  return makeModel("seven-quadrics",
                   {{"x1", 2}, {"x2", 2}, {"x3", 2}, {"x4", 2}, {"y1", 3}, {"y2", 3}, {"y3", 3}, {"y4", 3},
                    {"y5", 3}, {"y6", 3}, {"y7", 3}},
                   {{"y1", "x1^2"}, {"y2", "x2^2"}, {"y3", "x3^2"}, {"y4", "x4^2"}, {"y5", "x1*x2"},
                    {"y6", "x1*x3"}, {"y7", "x1*x4"}});
}

}  // namespace

TEST_CASE("formal dimension") {
  CHECK(formalDimension(corpusModel("sphere-even")) == 2);
  CHECK(formalDimension(corpusModel("n1r1")) == 7);
  CHECK(formalDimension(corpusModel("all-odd")) == 15);
  CHECK(formalDimension(corpusModel("quadrics-n3r3")) == 15);
}

TEST_CASE("Betti numbers of small models") {
  BettiTable s = completeBetti(corpusModel("sphere-even"));
  CHECK(s.complete);
  CHECK(s.dims == Dims{{0, 1}, {2, 1}});
  CHECK(s.totalDim == 2);

  BettiTable n1r1 = completeBetti(corpusModel("n1r1"));
  CHECK(n1r1.complete);
  CHECK(n1r1.dims == Dims{{0, 1}, {2, 1}, {5, 1}, {7, 1}});

  BettiTable odd = completeBetti(corpusModel("all-odd"));
  CHECK(odd.totalDim == 8);
  CHECK(odd.at(15) == 1);
  CHECK(odd.at(4) == 0);

  CHECK_FALSE(completeBetti(corpusModel("non-elliptic")).complete);
}

TEST_CASE("Betti numbers agree with the dense oracle") {
  for (const char* name : {"sphere-even", "sphere-odd", "n1r1", "pure-n2r1", "pure-n1r2", "hyperelliptic-tail",
                           "pure-mixed", "non-elliptic"}) {
    CAPTURE(name);
    Model m = corpusModel(name);
    const int top = std::min(formalDimension(m) + 2, 20);
    BettiTable t = betti(m, top);
    auto reference = oracle::betti(m, top);
    for (int p = 0; p <= top; ++p) {
      CAPTURE(p);
      CHECK(t.at(p) == reference[static_cast<std::size_t>(p)]);
    }
  }
}

TEST_CASE("Euler characteristics") {
  Model m = corpusModel("n1r1");
  EulerCharacteristics e = eulerCharacteristics(m, completeBetti(m));
  CHECK(e.chi == 0);
  CHECK(e.chiPi == -1);
  Model s = corpusModel("squarefree-n2");
  e = eulerCharacteristics(s, completeBetti(s));
  CHECK(e.chi == 4);
  CHECK(e.chiPi == 0);
  CHECK_THROWS_AS(eulerCharacteristics(m, betti(m, 3)), InputError);
}

TEST_CASE("ellipticity certificates") {
  CHECK(certifyElliptic(corpusModel("exact-powers")).status == EllipticStatus::Elliptic);
  CHECK(certifyElliptic(corpusModel("hyperelliptic-tail")).elliptic);
  CHECK(certifyElliptic(corpusModel("non-elliptic")).status == EllipticStatus::NotElliptic);
  CHECK(certifyElliptic(corpusModel("exact-powers-y2y3")).status == EllipticStatus::NotElliptic);
  Model notHyperelliptic = makeModel("m", {{"x", 2}, {"y", 3}, {"w", 4}}, {{"y", "x^2"}, {"w", "x*y"}});
  CHECK_THROWS_AS(certifyElliptic(notHyperelliptic), InputError);
}

TEST_CASE("verdict rejects unsuitable input") {
  CHECK_THROWS_AS(hilaliVerdict(corpusModel("linear")), InputError);
  CHECK_THROWS_AS(hilaliVerdict(corpusModel("non-elliptic")), InputError);
  CHECK_THROWS_AS(hilaliVerdict(corpusModel("bad-d-squared")), InputError);
}

TEST_CASE("verdict branches") {
  HilaliVerdict s = hilaliVerdict(corpusModel("squarefree-n3"));
  CHECK(s.branch == VerdictBranch::LengthBound);
  CHECK(s.branchBound == 6);
  CHECK(s.dimH == 8);

  HilaliVerdict n1r1 = hilaliVerdict(corpusModel("n1r1"));
  CHECK(n1r1.holds);
  CHECK(n1r1.branch == VerdictBranch::LowCorank);
  CHECK(n1r1.branchBound == 4);
  CHECK(n1r1.signsOk());

  HilaliVerdict q = hilaliVerdict(sevenQuadrics());
  CHECK(q.n == 4);
  CHECK(q.r == 3);
  CHECK(q.branch == VerdictBranch::QuadraticCount);
  REQUIRE(q.quadraticClasses.has_value());
  CHECK(*q.quadraticClasses == 3);
  CHECK(q.table.at(4) == 3);
  CHECK(q.branchBound == 16);
  CHECK(q.branchConsistent);
  CHECK(q.holds);

  HilaliVerdict odd = hilaliVerdict(corpusModel("all-odd"));
  CHECK(odd.branch == VerdictBranch::PowerOfTwo);
  CHECK(odd.branchBound == 8);
  CHECK(std::string(toString(VerdictBranch::PowerOfTwo)) == "power-of-two");
}

TEST_CASE("cocycles and coboundaries") {
  Model m = corpusModel("n1r1");
  CHECK(isCoboundary(m, expr(m, "x^2")));
  CHECK_FALSE(isCocycle(m, expr(m, "x*y1")));
  Element z = expr(m, "x*y1 - y2");
  CHECK(isCocycle(m, z));
  CHECK_FALSE(isCoboundary(m, z));
  CHECK(cocycleBasis(m, 5).size() == 1);
  CHECK(coboundaryBasis(m, 4).size() == 1);
  CHECK(cocycleBasis(m, 3).empty());

  Model q = corpusModel("quadrics-n3r3");
  Element alpha = expr(q, "x3*y2*y3 + x1*y3*y5 - x2*y2*y5");
  CHECK(isCocycle(q, alpha));
  CHECK_FALSE(isCoboundary(q, alpha));
}

TEST_CASE("lower graded Betti numbers") {
  CHECK(lowerGradedBetti(corpusModel("n1r1")) == Dims{{0, 2}, {1, 2}});
  CHECK(lowerGradedBetti(corpusModel("sphere-even")) == Dims{{0, 2}});
  CHECK(lowerGradedBetti(corpusModel("all-odd")) == Dims{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("quadratic class count") {
  CHECK(quadraticClassCount(corpusModel("pure-n2r1")) == 0);
  CHECK(quadraticClassCount(corpusModel("squarefree-n2")) == 1);
  CHECK(quadraticClassCount(sevenQuadrics()) == 3);
}
