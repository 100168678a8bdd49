#include "doctest.h"

#include "hilali/cohomology.hpp"
#include "hilali/errors.hpp"
#include "hilali/koszul_tor.hpp"

#include "support/fixtures.hpp"

using namespace hilali;
using fixtures::corpusModel;

namespace {

using Dims = std::map<int, std::size_t>;

std::vector<Element> relations(const Universe& ring, std::initializer_list<const char*> texts) {
  std::vector<Element> out;
  for (const char* t : texts) out.push_back(parseExpression(t, ring));
  return out;
}

Universe line() { return makeUniverse({{"x", 2}}); }
Universe plane() { return makeUniverse({{"x1", 2}, {"x2", 2}}); }

}  // namespace

TEST_CASE("truncated polynomial ring") {
  auto ring = line();
  QuotientResult q = quotientBasis(ring, relations(ring, {"x^3"}));
  REQUIRE(q.finite());
  CHECK(q.module->length() == 3);
  CHECK(q.module->graded());
  CHECK(q.module->socleDegree() == 4);
  Matrix x = q.module->action(0);
  CHECK_FALSE((x * x).isZero());
  CHECK((x * x * x).isZero());
}

TEST_CASE("complete intersection of squares") {
  auto ring = plane();
  QuotientResult q = quotientBasis(ring, relations(ring, {"x1^2", "x2^2"}));
  REQUIRE(q.finite());
  CHECK(q.module->dimensionsByDegree() == Dims{{0, 1}, {2, 2}, {4, 1}});
  auto v = q.module->coordinates(parseExpression("x1*x2", ring));
  CHECK_FALSE(isZeroVector(v));
  CHECK(isZeroVector(q.module->coordinates(parseExpression("x1^2*x2", ring))));
}

TEST_CASE("non-finite quotients are detected") {
  auto ring = plane();
  CHECK(quotientBasis(ring, relations(ring, {"x1^2", "x1*x2"})).status == QuotientStatus::NotFinite);
  CHECK(quotientBasis(ring, relations(ring, {"x1^2"})).status == QuotientStatus::NotFinite);
  CHECK_FALSE(isRegularSequence(ring, relations(ring, {"x1^2", "x1*x2"})));
  CHECK(isRegularSequence(ring, relations(ring, {"x1^2 + x2^2", "x1*x2"})));
}

TEST_CASE("the unit ideal has length zero") {
  auto ring = line();
  QuotientResult q = quotientBasis(ring, relations(ring, {"1"}));
  REQUIRE(q.finite());
  CHECK(q.module->length() == 0);
}

TEST_CASE("inhomogeneous relations") {
  auto ring = line();
  QuotientResult q = quotientBasis(ring, relations(ring, {"x^2 - x"}));
  REQUIRE(q.finite());
  CHECK(q.module->length() == 2);
  CHECK_FALSE(q.module->graded());
}

TEST_CASE("regular sequence arity") {
  auto ring = plane();
  CHECK_THROWS_AS(isRegularSequence(ring, relations(ring, {"x1^2"})), InputError);
}

TEST_CASE("Koszul differential squares to zero") {
  for (const char* name : {"pure-n1r2", "quadrics-n3r3"}) {
    CAPTURE(name);
    HalperinBasis h = halperinBasis(corpusModel(name));
    const int r = static_cast<int>(h.structure.parameterCount());
    for (int k = 2; k <= r; ++k)
      CHECK((koszulDifferential(h.module, h.structure, k - 1) * koszulDifferential(h.module, h.structure, k))
                .isZero());
  }
}

TEST_CASE("Tor tables") {
  HalperinBasis h = halperinBasis(corpusModel("n1r1"));
  CHECK(h.strategy == "identity");
  TorTable t = torTable(h.module, h.structure);
  CHECK(t.r == 1);
  CHECK(t.dims == Dims{{0, 2}, {1, 2}});
  CHECK(t.total == 4);

  HalperinBasis odd = halperinBasis(corpusModel("all-odd"));
  CHECK(odd.module.length() == 1);
  CHECK(torTable(odd.module, odd.structure).dims == Dims{{0, 1}, {1, 3}, {2, 3}, {3, 1}});

  HalperinBasis sq = halperinBasis(corpusModel("squarefree-n3"));
  TorBoundsReport b = torBoundsCheck(sq.module, sq.structure, 3);
  CHECK(b.length == 8);
  CHECK(b.passed());
}

TEST_CASE("Halperin search reorders when the first images are not regular") {
  Model m = makeModel("reordered", {{"x1", 2}, {"x2", 2}, {"y1", 3}, {"y2", 3}, {"y3", 3}},
                      {{"y1", "x1*x2"}, {"y2", "x1^2"}, {"y3", "x2^2"}});
  HalperinBasis h = halperinBasis(m);
  CHECK(h.strategy != "identity");
  CHECK(h.attempts > 1);
  CHECK(h.module.length() == 4);
  CHECK(torTable(h.module, h.structure).total == completeBetti(m).totalDim);

  CHECK_THROWS_AS(halperinBasis(corpusModel("hyperelliptic-tail")), InputError);
}

TEST_CASE("duality pairing") {
  HalperinBasis h = halperinBasis(corpusModel("exact-powers"));
  PairingReport p = dualityPairing(h.module);
  CHECK(p.socleDimension == 1);
  CHECK(p.perfect);

  auto ring = plane();
  QuotientResult q = quotientBasis(ring, relations(ring, {"x1^2", "x1*x2", "x2^2"}));
  REQUIRE(q.finite());
  PairingReport bad = dualityPairing(*q.module);
  CHECK(bad.socleDimension == 2);
  CHECK_FALSE(bad.perfect);

  auto l = line();
  QuotientResult fiber = quotientBasis(l, relations(l, {"x^3 - x"}));
  REQUIRE(fiber.finite());
  CHECK(dualityPairing(*fiber.module, 3).perfect);
}

TEST_CASE("cross-check of H against Tor") {
  for (const char* name : {"pure-n2r1", "pure-mixed", "quadrics-n3r3"}) {
    CAPTURE(name);
    CrossCheckReport c = torViaModelCrossCheck(corpusModel(name));
    CHECK(c.passed());
    CHECK(c.dimH == c.tor.total);
  }
}
