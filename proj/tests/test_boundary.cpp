#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "choquet/boundary.hpp"
#include "choquet/error.hpp"
#include "choquet/gallery.hpp"
#include "choquet/types.hpp"

using namespace choquet;

namespace {

bool isMember(const BoundaryAnalysis& b, const std::string& label) {
  return std::find(b.members.begin(), b.members.end(), label) != b.members.end();
}

} // namespace

TEST_CASE("vanishing-at-zero interval space: every point but the zero row is extreme") {
  FunctionSpace s = makeIntervalSpace(1, 4);
  BoundaryAnalysis b = choquetBoundary(s);
  CHECK(b.complete);
  CHECK(!isMember(b, "0"));
  for (const std::string& label : s.K.labels)
    if (label != "0") CHECK(isMember(b, label));
  // the evaluation at the zero row is the zero functional
  NormValue nv = dualNorm(s, evaluationFunctional(s, 0));
  REQUIRE(nv.isExact());
  CHECK(*nv.exact == Rat(0));
}

TEST_CASE("contracting endpoint coupling removes the right endpoint") {
  // f(1) = f(0)/2 keeps the evaluation at 1 inside the ball
  FunctionSpace s = makeIntervalSpace(3, 4, Scalar(Rat(1, 2)));
  BoundaryAnalysis b = choquetBoundary(s);
  CHECK(b.complete);
  CHECK(!isMember(b, "1"));
  CHECK(isMember(b, "0"));
  CHECK(isMember(b, "1/2"));
  NormValue nv = dualNorm(s, evaluationFunctional(s, s.K.index("1")));
  REQUIRE(nv.isExact());
  CHECK(*nv.exact == Rat(1, 2));
}

TEST_CASE("anchored band: the whole middle line is non-extreme") {
  AnchoredBandParams p; // variant 1, grid 2, alpha 1/4, beta 1/2
  FunctionSpace s = makeAnchoredBand(p);
  BoundaryAnalysis b = choquetBoundary(s);
  CHECK(b.complete);
  for (const std::string& label : s.K.labels) {
    bool middle = label.size() > 2 && label.substr(label.size() - 3) == ",0)";
    CHECK(isMember(b, label) == !middle);
  }
  // anchor relation pins the norm at the anchored point to |alpha| + |beta|
  NormValue nv = dualNorm(s, evaluationFunctional(s, s.K.index("(0,0)")));
  REQUIRE(nv.isExact());
  CHECK(*nv.exact == Rat(3, 4));
  // every other point evaluation has norm one
  for (const std::string& label : {"(1/2,0)", "(1,1)", "a", "b"}) {
    NormValue o = dualNorm(s, evaluationFunctional(s, s.K.index(label)));
    REQUIRE(o.isExact());
    CHECK(*o.exact == Rat(1));
  }
}

TEST_CASE("phase classes group evaluations that differ by a unimodular factor") {
  FunctionSpace two = makeTwoPoint();
  auto classes = phaseClasses(two);
  REQUIRE(classes.size() == 1); // the rows are 1 and -1
  CHECK(classes[0].size() == 2);

  FunctionSpace s = makeIntervalSpace(2, 4, Scalar(Rat(-1)));
  auto ic = phaseClasses(s);
  // endpoints 0 and 1 satisfy f(1) = -f(0): one shared class
  bool found = false;
  for (const auto& cls : ic)
    if (std::find(cls.begin(), cls.end(), "0") != cls.end()) {
      found = true;
      CHECK(std::find(cls.begin(), cls.end(), "1") != cls.end());
    }
  CHECK(found);
}

TEST_CASE("unimodular ratio detection is exact in both fields") {
  std::vector<Scalar> base = {Scalar(Rat(1, 2)), Scalar(Rat(-1, 3))};
  std::vector<Scalar> flipped = {Scalar(Rat(-1, 2)), Scalar(Rat(1, 3))};
  auto r = unimodularRatio(flipped, base);
  REQUIRE(r.has_value());
  CHECK(*r == Scalar(Rat(-1)));

  Scalar rot(Rat(3, 5), Rat(4, 5));
  std::vector<Scalar> rotated = {base[0] * rot, base[1] * rot};
  auto r2 = unimodularRatio(rotated, base);
  REQUIRE(r2.has_value());
  CHECK(*r2 == rot);

  std::vector<Scalar> scaled = {base[0] * Scalar(Rat(2)), base[1] * Scalar(Rat(2))};
  CHECK(!unimodularRatio(scaled, base).has_value());
  CHECK(!unimodularRatio({Scalar(1), Scalar(1)}, base).has_value());
}

TEST_CASE("unit action injectivity distinguishes the interval variants") {
  // f(1) = -f(0): evaluations at 0 and 1 are opposite, both extreme
  Verdict bad = unitActionInjective(makeIntervalSpace(2, 4, Scalar(Rat(-1))));
  CHECK(bad.isFalse());
  CHECK(bad.witness.contains("pointA"));
  CHECK(bad.witness.contains("pointB"));
  CHECK(bad.witness.contains("ratio"));

  Verdict good = unitActionInjective(makeIntervalSpace(3, 4, Scalar(Rat(1, 2))));
  CHECK(good.isTrue());
}

TEST_CASE("peak functions certify extremity and refuse interior points") {
  FunctionSpace s = makeIntervalSpace(1, 4);
  auto peak = peakFunction(s, "1/2");
  REQUIRE(peak.has_value());
  size_t x = s.K.index("1/2");
  CHECK(s.eval(*peak, x) == Scalar(Rat(1)));
  for (size_t y = 0; y < s.n(); ++y) {
    if (y == x) continue;
    Scalar v = s.eval(*peak, y);
    CHECK(sgn(v.im) == 0);
    CHECK(ratAbs(v.re) < Rat(1));
  }
  // h(0) = 1 is impossible in this space
  CHECK(!peakFunction(s, "0").has_value());
}

TEST_CASE("pair peak functions norm two boundary points at once") {
  FunctionSpace s = makeIntervalSpace(1, 4);
  Rat margin(1, 1000);
  auto h = pairPeakFunction(s, "1/4", "3/4", margin);
  REQUIRE(h.has_value());
  CHECK(s.eval(*h, s.K.index("1/4")) == Scalar(Rat(1)));
  Scalar vb = s.eval(*h, s.K.index("3/4"));
  CHECK(vb.normSq() == Rat(1));
  for (const std::string& other : {"1/2", "1"}) {
    Scalar v = s.eval(*h, s.K.index(other));
    CHECK(v.normSq() <= (Rat(1) - margin) * (Rat(1) - margin));
  }
}

TEST_CASE("state space of a with-constants space sees simpliciality geometry") {
  // doubled spine points average their two quills: a simplex state space
  FunctionSpace porc = makePorcupine({"0", "1", "2"}, {"1"});
  StateSpaceInfo info = stateSpace(porc);
  CHECK(info.simplex);
  CHECK(info.vertexLabels.size() == info.affineDim + 1);

  // balanced endpoints: simplicial but the state space is a square
  FunctionSpace bp = makeBalancedPairSpace(1, Field::Real);
  StateSpaceInfo sq = stateSpace(bp);
  CHECK(!sq.simplex);
  CHECK(sq.vertexLabels.size() == 4);
  CHECK(sq.affineDim == 2);

  // spaces without constants are refused
  CHECK_THROWS_AS(stateSpace(makeTwoPoint()), Error);
}

TEST_CASE("complex dual norms give nested certified enclosures") {
  FunctionSpace s = makeSpace("cpair", Field::Complex, {"u", "v"},
                              {{Scalar(1)}, {Scalar(Rat(0), Rat(1))}});
  Functional phi{{Scalar(Rat(1), Rat(1))}}; // norm sqrt(2)
  AnalysisOptions coarse;
  coarse.phaseGridN = 8;
  AnalysisOptions fine;
  fine.phaseGridN = 16;
  NormValue a = dualNorm(s, phi, coarse);
  NormValue b = dualNorm(s, phi, fine);
  CHECK(!a.isExact());
  for (const NormValue* nv : {&a, &b}) {
    CHECK(nv->enclosure.lo * nv->enclosure.lo <= Rat(2));
    CHECK(nv->enclosure.hi * nv->enclosure.hi >= Rat(2));
  }
  // nested: the finer enclosure sits inside the coarser one
  CHECK(b.enclosure.lo >= a.enclosure.lo);
  CHECK(b.enclosure.hi <= a.enclosure.hi);
  // ratio stays below the certified secant bound of the finer grid
  CHECK(b.enclosure.hi * Rat(99, 100) < b.enclosure.lo * Rat(104, 100));
}

TEST_CASE("complex boundary classification decides clean cases") {
  // v evaluates to i times u's row: one phase class, both non-extreme is
  // impossible; the class is a single extreme direction
  FunctionSpace s = makeSpace("cpair", Field::Complex, {"u", "v"},
                              {{Scalar(1)}, {Scalar(Rat(0), Rat(1))}});
  BoundaryAnalysis b = choquetBoundary(s);
  CHECK(b.complete);
  CHECK(b.members.size() == 2);

  // a strictly interior evaluation: |row| = 1/2
  FunctionSpace t = makeSpace("cmix", Field::Complex, {"u", "v", "w"},
                              {{Scalar(1)}, {Scalar(Rat(0), Rat(1))},
                               {Scalar(Rat(1, 2))}});
  BoundaryAnalysis bt = choquetBoundary(t);
  CHECK(bt.complete);
  CHECK(!isMember(bt, "w"));
  CHECK(isMember(bt, "u"));
}

TEST_CASE("real dual norm equals the best aligned measure value") {
  // rows (1,0), (0,1), (1/2,1/2): the functional (1,1) has norm 2
  FunctionSpace s = makeSpace("tri", Field::Real, {"p", "q", "r"},
                              {{Scalar(1), Scalar(0)},
                               {Scalar(0), Scalar(1)},
                               {Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}});
  NormValue nv = dualNorm(s, Functional{{Scalar(1), Scalar(1)}});
  REQUIRE(nv.isExact());
  CHECK(*nv.exact == Rat(2));
  NormValue diff = dualNorm(s, Functional{{Scalar(1), Scalar(-1)}});
  REQUIRE(diff.isExact());
  CHECK(*diff.exact == Rat(2));
}
