#include "doctest.h"

#include "hilali/errors.hpp"
#include "hilali/model.hpp"

#include "support/fixtures.hpp"

using namespace hilali;
using fixtures::corpusModel;
using fixtures::expr;

namespace {

Model notHyperelliptic() { return makeModel("m", {{"x", 2}, {"y", 3}, {"w", 4}}, {{"y", "x^2"}, {"w", "x*y"}}); }

}  // namespace

TEST_CASE("d extends by the Leibniz rule") {
  Model m = corpusModel("exact-powers");
  CHECK(m.apply(expr(m, "x1^4*y1 + x1*y2 - x2*y3")) == expr(m, "2*x1^10"));
  CHECK(m.apply(expr(m, "x2^2*y1 + x2*y2 - x1^5*y3")) == expr(m, "2*x2^4"));
  // d(y1 y2) = dy1 y2 - y1 dy2
  CHECK(m.apply(expr(m, "y1*y2")) == expr(m, "x1^6*y2 + x2^2*y2 - x1^9*y1 - x2^3*y1"));
}

TEST_CASE("d squares to zero on a pure model") {
  Model m = corpusModel("quadrics-n3r3");
  for (const char* e : {"y1*y2*y3", "x1*y4*y6", "x2^3*y5", "y1*y2*y3*y4*y5*y6"})
    CHECK(m.apply(m.apply(expr(m, e))).isZero());
}

TEST_CASE("checkDifferential names the failing generator") {
  Model bad = corpusModel("bad-d-squared");
  ValidationReport v = checkDifferential(bad);
  CHECK_FALSE(v.passed());
  CHECK(v.firstFailure() == "y1");
  CHECK(checkDifferential(corpusModel("hyperelliptic-tail")).passed());
}

TEST_CASE("differentials must have degree deg g + 1") {
  CHECK_THROWS_AS(makeModel("m", {{"x", 2}, {"y", 3}}, {{"y", "x"}}), InputError);
  CHECK_THROWS_AS(makeModel("m", {{"x", 2}}, {{"z", "x^2"}}), InputError);
  CHECK_NOTHROW(makeModel("m", {{"x", 2}, {"y", 3}}, {{"y", "x^2"}}));
}

TEST_CASE("classification") {
  Classification c = classify(corpusModel("exact-powers"));
  CHECK(c.isMinimal);
  CHECK(c.isPure);
  CHECK(c.isHyperelliptic);
  CHECK(c.n == 2);
  CHECK(c.r == 1);

  Classification tail = classify(corpusModel("hyperelliptic-tail"));
  CHECK(tail.isHyperelliptic);
  CHECK_FALSE(tail.isPure);
  CHECK(tail.r == 2);

  CHECK_FALSE(classify(corpusModel("linear")).isMinimal);
  CHECK(classify(corpusModel("all-odd")).n == 0);

  CHECK_FALSE(classify(notHyperelliptic()).isHyperelliptic);
}

TEST_CASE("purePart keeps only the even component") {
  Model tail = corpusModel("hyperelliptic-tail");
  Model pure = purePart(tail);
  CHECK(classify(pure).isPure);
  CHECK(toString(pure.differentialOf(*pure.generators().find("y4"))) == "x1^5");
  CHECK_THROWS_AS(purePart(notHyperelliptic()), InputError);
}

TEST_CASE("lower grading splits by odd factor count") {
  Model m = corpusModel("hyperelliptic-tail");
  auto parts = lowerGrading(m.differentialOf(*m.generators().find("y4")));
  REQUIRE(parts.size() == 2);
  CHECK(parts.count(0) == 1);
  CHECK(parts.count(2) == 1);
  CHECK(parts.at(2).termCount() == 3);
}

TEST_CASE("model documents round trip") {
  Model m = corpusModel("pure-mixed");
  Model back = modelFromJson(modelToJson(m));
  CHECK(back.name() == m.name());
  CHECK(back.generators() == m.generators());
  for (std::size_t i = 0; i < m.dimV(); ++i)
    CHECK(toString(back.differentialOf(i)) == toString(m.differentialOf(i)));
}

TEST_CASE("malformed model documents are input errors") {
  CHECK_THROWS_AS(modelFromJson({{"format", "other/1"}}), InputError);
  CHECK_THROWS_AS(modelFromJson({{"format", kModelFormat}, {"name", "m"}}), InputError);
  CHECK_THROWS_AS(modelFromJson({{"format", kModelFormat},
                                 {"name", "m"},
                                 {"generators", {{{"name", "x"}, {"degree", 2}}}},
                                 {"differential", {{"x", "x +"}}}}),
                  InputError);
  CHECK_THROWS_AS(loadModel("/nonexistent/file.model"), InputError);
}
