#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "choquet/error.hpp"
#include "choquet/io.hpp"
#include "choquet/types.hpp"

using namespace choquet;

namespace {

FunctionSpace triangle() {
  // three points, basis {x, y} (no constants)
  return makeSpace("triangle", Field::Real, {"p", "q", "r"},
                   {{Scalar(1), Scalar(0)},
                    {Scalar(0), Scalar(1)},
                    {Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}});
}

bool hasCode(const Error& e, const std::string& code) { return e.code() == code; }

} // namespace

TEST_CASE("space construction validates its invariants") {
  CHECK_NOTHROW(triangle());

  CHECK_THROWS_WITH_AS(
      makeSpace("one", Field::Real, {"a"}, {{Scalar(1)}}), doctest::Contains("two points"),
      Error);

  try {
    makeSpace("dup", Field::Real, {"a", "a"}, {{Scalar(1)}, {Scalar(2)}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(hasCode(e, "DuplicatePoints"));
  }

  try { // identical rows cannot separate the two points
    makeSpace("nonsep", Field::Real, {"a", "b"}, {{Scalar(1)}, {Scalar(1)}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(hasCode(e, "NonSeparating"));
  }

  try { // second column is twice the first
    makeSpace("dep", Field::Real, {"a", "b"},
              {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(hasCode(e, "DependentBasis"));
  }

  try { // complex entry in real mode
    makeSpace("cplx", Field::Real, {"a", "b"},
              {{Scalar(Rat(0), Rat(1))}, {Scalar(1)}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(hasCode(e, "MalformedScalar"));
  }

  CHECK_THROWS_AS(makeSpace("ragged", Field::Real, {"a", "b"},
                            {{Scalar(1), Scalar(0)}, {Scalar(1)}}),
                  Error);
}

TEST_CASE("constant detection notices exactly the spaces containing ones") {
  // x + y is identically one on the triangle's three points
  CHECK(triangle().containsConstants);
  // here x + y takes the values 1, 1, 2, and no combination is constant
  FunctionSpace without = makeSpace("without", Field::Real, {"a", "b", "c"},
                                    {{Scalar(1), Scalar(0)},
                                     {Scalar(0), Scalar(1)},
                                     {Scalar(1), Scalar(1)}});
  CHECK(!without.containsConstants);
}

TEST_CASE("evaluation, values, and coefficient recovery agree") {
  FunctionSpace s = triangle();
  std::vector<Scalar> c = {Scalar(Rat(2)), Scalar(Rat(-4))};
  CHECK(s.eval(c, 0) == Scalar(Rat(2)));
  CHECK(s.eval(c, 1) == Scalar(Rat(-4)));
  CHECK(s.eval(c, 2) == Scalar(Rat(-1)));
  auto vals = s.values(c);
  auto back = s.coefficientsFor(vals);
  REQUIRE(back.has_value());
  CHECK(*back == c);
  // a vector outside the span has no coefficients
  CHECK(!s.coefficientsFor({Scalar(1), Scalar(0), Scalar(0)}).has_value());
}

TEST_CASE("measure algebra drops zeros and compares by content") {
  Measure a = pointMass("x", Scalar(Rat(1, 2)));
  a.set("y", Scalar(Rat(-1, 3)));
  Measure b = pointMass("y", Scalar(Rat(1, 3)));
  Measure sum = a + b;
  CHECK(sum.at("y").isZero());
  CHECK(sum.w.count("y") == 0); // exact zero removed from the support
  CHECK(sum == pointMass("x", Scalar(Rat(1, 2))));
  CHECK((a - a).isZero());
  CHECK(a.scaled(Scalar(Rat(2))).at("x") == Scalar(Rat(1)));
  CHECK(a.scaled(Scalar(Rat(0))).isZero());
}

TEST_CASE("total variation is exact on rational moduli and certified otherwise") {
  Measure mu = pointMass("x", Scalar(Rat(3, 5), Rat(4, 5))); // modulus 1
  mu.set("y", Scalar(Rat(-1, 2)));
  NormValue tv = totalVariation(mu);
  REQUIRE(tv.isExact());
  CHECK(*tv.exact == Rat(3, 2));

  Measure hard = pointMass("x", Scalar(Rat(1), Rat(1))); // modulus sqrt(2)
  NormValue tv2 = totalVariation(hard);
  CHECK(!tv2.isExact());
  CHECK(tv2.enclosure.lo * tv2.enclosure.lo <= Rat(2));
  CHECK(tv2.enclosure.hi * tv2.enclosure.hi >= Rat(2));
}

TEST_CASE("functionals induced by measures match evaluation functionals") {
  FunctionSpace s = triangle();
  for (size_t x = 0; x < s.n(); ++x)
    CHECK(functionalOf(s, pointMass(s.K.labels[x])) == evaluationFunctional(s, x));
  Measure mix = pointMass("p", Scalar(Rat(1, 2)));
  mix.set("q", Scalar(Rat(1, 2)));
  Functional phi = functionalOf(s, mix);
  CHECK(phi.coeffs == std::vector<Scalar>{Scalar(Rat(1, 2)), Scalar(Rat(1, 2))});
  CHECK(integrate(s, {Scalar(1), Scalar(1)}, mix) == Scalar(Rat(1)));
  CHECK_THROWS_AS(integrate(s, {Scalar(1)}, mix), Error);
}

TEST_CASE("json round trips preserve every core value") {
  CHECK(ratFromJson(ratToJson(Rat(-22, 7))) == Rat(-22, 7));
  Scalar z(Rat(3, 5), Rat(-4, 5));
  CHECK(scalarFromJson(scalarToJson(z)) == z);
  CHECK(scalarFromJson(scalarToJson(Scalar(Rat(5)))) == Scalar(Rat(5)));

  Measure mu = pointMass("a", Scalar(Rat(1, 3)));
  mu.set("b", Scalar(Rat(0), Rat(-2)));
  CHECK(measureFromJson(measureToJson(mu)) == mu);

  Functional phi{{Scalar(Rat(1)), Scalar(Rat(0), Rat(1, 2))}};
  CHECK(functionalFromJson(functionalToJson(phi)) == phi);

  RatInterval iv(Rat(1, 3), Rat(2, 3));
  RatInterval iv2 = intervalFromJson(intervalToJson(iv));
  CHECK(iv2.lo == iv.lo);
  CHECK(iv2.hi == iv.hi);

  Verdict v = Verdict::no("test-method", json{{"detail", 7}});
  Verdict v2 = verdictFromJson(verdictToJson(v));
  CHECK(v2.status == Status::False);
  CHECK(v2.method == "test-method");
  CHECK(v2.witness.at("detail") == 7);
}

TEST_CASE("space documents round trip and carry a stable digest") {
  FunctionSpace s = triangle();
  json doc = saveSpace(s);
  CHECK(doc.at("schema") == kSchemaVersion);
  FunctionSpace t = loadSpace(doc);
  CHECK(t.name == s.name);
  CHECK(t.field == s.field);
  CHECK(t.K.labels == s.K.labels);
  CHECK(t.E == s.E);
  CHECK(t.containsConstants == s.containsConstants);
  CHECK(spaceDigest(t) == spaceDigest(s));

  // the digest tracks content
  FunctionSpace u = makeSpace("triangle", Field::Real, {"p", "q", "r"},
                              {{Scalar(1), Scalar(0)},
                               {Scalar(0), Scalar(1)},
                               {Scalar(Rat(1, 3)), Scalar(Rat(1, 2))}});
  CHECK(spaceDigest(u) != spaceDigest(s));

  json summary = spaceSummary(s);
  CHECK(summary.at("name") == "triangle");
  CHECK(summary.at("points") == 3);
  CHECK(summary.at("dimension") == 2);
  CHECK(summary.at("field") == "real");
}

TEST_CASE("loading validates documents and applies field overrides") {
  json doc = saveSpace(triangle());

  json bad = doc;
  bad["schema"] = "other/9";
  CHECK_THROWS_AS(loadSpace(bad), Error);

  json missing = doc;
  missing.erase("points");
  CHECK_THROWS_AS(loadSpace(missing), Error);

  // real -> complex widening is allowed
  FunctionSpace widened = loadSpace(doc, Field::Complex);
  CHECK(widened.field == Field::Complex);

  // complex data cannot be forced real
  FunctionSpace c = makeSpace("c", Field::Complex, {"a", "b"},
                              {{Scalar(Rat(0), Rat(1))}, {Scalar(1)}});
  json cdoc = saveSpace(c);
  CHECK_THROWS_AS(loadSpace(cdoc, Field::Real), Error);
}

TEST_CASE("verdict json keeps quantitative enclosures") {
  Verdict v = Verdict::unknown("grid");
  v.enclosure = RatInterval(Rat(1, 2), Rat(3, 4));
  Verdict w = verdictFromJson(verdictToJson(v));
  REQUIRE(w.enclosure.has_value());
  CHECK(w.enclosure->lo == Rat(1, 2));
  CHECK(w.enclosure->hi == Rat(3, 4));
}
