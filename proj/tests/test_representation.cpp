#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "choquet/error.hpp"
#include "choquet/gallery.hpp"
#include "choquet/io.hpp"
#include "choquet/representation.hpp"

using namespace choquet;

namespace {

bool containsMeasure(const std::vector<Measure>& v, const Measure& mu) {
  return std::any_of(v.begin(), v.end(), [&](const Measure& m) { return m == mu; });
}

} // namespace

TEST_CASE("representing vertices find both balanced decompositions") {
  FunctionSpace s = makeBalancedPairSpace(1, Field::Real);
  Measure left = pointMass("0") + pointMass("1");
  Functional phi = functionalOf(s, left);
  auto verts = representingVertices(s, phi);
  Measure right = pointMass("2") + pointMass("3");
  CHECK(containsMeasure(verts, left));
  CHECK(containsMeasure(verts, right));
  // every vertex is a norm-preserving representation
  for (const Measure& mu : verts) {
    CHECK(functionalOf(s, mu) == phi);
    NormValue tv = totalVariation(mu);
    REQUIRE(tv.isExact());
    CHECK(*tv.exact == Rat(2));
  }
}

TEST_CASE("uniqueness probes split point evaluations correctly") {
  FunctionSpace s = makeIntervalSpace(3, 4, Scalar(Rat(1, 2)));
  // the evaluation at 1 is represented only by the halved mass at 0
  auto rep = uniqueBoundaryRepresentation(s, "1");
  REQUIRE(rep.has_value());
  CHECK(*rep == pointMass("0", Scalar(Rat(1, 2))));

  RepresentationProbe probe =
      representationUniqueness(s, evaluationFunctional(s, s.K.index("1")), true);
  CHECK(probe.unique());

  // the balanced pair functional is not uniquely represented
  FunctionSpace bp = makeBalancedPairSpace(1, Field::Real);
  Functional phi = functionalOf(bp, pointMass("0") + pointMass("1"));
  RepresentationProbe p2 = representationUniqueness(bp, phi, true);
  CHECK(!p2.unique());
  REQUIRE(p2.second.has_value());
  CHECK(functionalOf(bp, p2.first) == phi);
  CHECK(functionalOf(bp, *p2.second) == phi);
  CHECK(!(p2.first == *p2.second));
}

TEST_CASE("boundary annihilators of the anchored band match the anchor relation") {
  AnchoredBandParams p; // alpha 1/4, beta 1/2
  FunctionSpace s = makeAnchoredBand(p);
  auto basis = boundaryAnnihilatorBasis(s);
  REQUIRE(basis.size() == 1);
  // alpha e_a + beta e_b - (e_(0,1) + e_(0,-1))/2, up to scaling
  Measure expected = pointMass("a", Scalar(Rat(1, 4))) +
                     pointMass("b", Scalar(Rat(1, 2))) +
                     pointMass("(0,1)", Scalar(Rat(-1, 2))) +
                     pointMass("(0,-1)", Scalar(Rat(-1, 2)));
  const Measure& got = basis[0];
  REQUIRE(!got.isZero());
  // find the scale via the mass at a
  Scalar scale = expected.at("a") / got.at("a");
  CHECK(got.scaled(scale) == expected);
  CHECK(functionalOf(s, got).isZero());
}

TEST_CASE("interval spaces have trivial boundary annihilators") {
  CHECK(boundaryAnnihilatorBasis(makeIntervalSpace(1, 4)).empty());
  CHECK(boundaryAnnihilatorBasis(makeIntervalSpace(3, 4, Scalar(Rat(1, 2)))).empty());
}

TEST_CASE("simpliciality verdicts across the gallery") {
  CHECK(isSimplicial(makeIntervalSpace(3, 4, Scalar(Rat(1, 2)))).isTrue());
  CHECK(isSimplicial(makeBalancedPairSpace(1, Field::Real)).isTrue());
  CHECK(isSimplicial(makePorcupine({"0", "1", "2"}, {"0", "2"})).isTrue());
  CHECK(isSimplicial(makeSquareAffine()).isFalse());
  CHECK(isSimplicial(makeIntervalSpace(2, 4, Scalar(Rat(-1)))).isFalse());
}

TEST_CASE("functional simpliciality separates the balanced pair from the band") {
  Verdict no = isFunctionallySimplicial(makeBalancedPairSpace(1, Field::Real));
  CHECK(no.isFalse());
  CHECK(verifyNonUniquenessWitness(makeBalancedPairSpace(1, Field::Real), no.witness));

  AnchoredBandParams p;
  CHECK(isFunctionallySimplicial(makeAnchoredBand(p)).isTrue());
}

TEST_CASE("non-uniqueness witnesses are rejected after tampering") {
  FunctionSpace bp = makeBalancedPairSpace(1, Field::Real);
  Verdict no = isFunctionallySimplicial(bp);
  REQUIRE(no.isFalse());
  json w = no.witness;
  REQUIRE(verifyNonUniquenessWitness(bp, w));

  // flip the sign of one atom of mu: it is no longer aligned with the
  // norming function, so the pair no longer attains its variation
  json broken = w;
  for (auto& [k, v] : broken["mu"].items()) {
    v = "-" + v.get<std::string>();
    break;
  }
  CHECK(!verifyNonUniquenessWitness(bp, broken));

  // a nu that no longer annihilates the space
  json skewed = w;
  for (auto& [k, v] : skewed["nu"].items()) {
    v = "7/8";
    break;
  }
  CHECK(!verifyNonUniquenessWitness(bp, skewed));

  // norming function escaping the unit ball
  json tall = w;
  tall["normingFunction"][0] = "5/2";
  CHECK(!verifyNonUniquenessWitness(bp, tall));

  json emptied = w;
  emptied["nu"] = json::object();
  CHECK(!verifyNonUniquenessWitness(bp, emptied));

  json missing = w;
  missing.erase("normingFunction");
  CHECK(!verifyNonUniquenessWitness(bp, missing));
}

TEST_CASE("simplexoid and cross-polytope tests see the dual ball shape") {
  CHECK(isSimplexoid(makeSquareAffine()).isFalse());
  CHECK(isL1Predual(makeSquareAffine()).isFalse());

  CHECK(isSimplexoid(makeTwoPoint()).isTrue());
  CHECK(isL1Predual(makeTwoPoint()).isTrue());

  CHECK(isL1Predual(makePorcupine({"0", "1", "2"}, {"1"})).isTrue());
  CHECK(isL1Predual(makeBalancedPairSpace(1, Field::Real)).isFalse());
}

TEST_CASE("affinely generated closure fixes spaces that are already closed") {
  // doubled points force averages; the closure adds nothing new
  FunctionSpace porc = makePorcupine({"0", "1", "2"}, {"1"});
  FunctionSpace ac = affineFunctionSpace(porc, "porc-closure");
  CHECK(ac.m() == porc.m());
  for (size_t j = 0; j < porc.m(); ++j) {
    std::vector<Scalar> unit(porc.m(), Scalar());
    unit[j] = Scalar(1);
    CHECK(ac.coefficientsFor(porc.values(unit)).has_value());
  }

}

TEST_CASE("the closure can grow: the band sheds its left column average") {
  // At (0,0) the unique norm-preserving representation is alpha d_a + beta d_b
  // (total variation 3/4, the dual norm there); the column average has mass 1
  // and so never constrains the closure.  The closure therefore keeps the
  // anchor relation and the two other column averages but frees f(0,+-1).
  AnchoredBandParams p;
  FunctionSpace band = makeAnchoredBand(p);
  FunctionSpace bandAc = affineFunctionSpace(band, "band-closure");
  CHECK(bandAc.m() == band.m() + 1);
  for (size_t j = 0; j < band.m(); ++j) {
    std::vector<Scalar> unit(band.m(), Scalar());
    unit[j] = Scalar(1);
    CHECK(bandAc.coefficientsFor(band.values(unit)).has_value());
  }
  // the spike at (0,-1) is in the closure but not in the band space
  std::vector<Scalar> spike(band.n(), Scalar());
  spike[band.K.index("(0,-1)")] = Scalar(1);
  CHECK(bandAc.coefficientsFor(spike).has_value());
  CHECK(!band.coefficientsFor(spike).has_value());
  // and the closure is idempotent
  FunctionSpace bandAc2 = affineFunctionSpace(bandAc, "band-closure-2");
  CHECK(bandAc2.m() == bandAc.m());
}

TEST_CASE("a vanishing constraint survives the closure via the zero measure") {
  // The evaluation at 0 has norm zero, so the empty measure is its unique
  // norm-preserving representation and every closure member vanishes at 0.
  FunctionSpace s = makeIntervalSpace(1, 2); // points 0, 1/2, 1; dim 2
  FunctionSpace ac = affineFunctionSpace(s, "vanish-closure");
  CHECK(ac.m() == s.m());
  for (size_t j = 0; j < s.m(); ++j) {
    std::vector<Scalar> unit(s.m(), Scalar());
    unit[j] = Scalar(1);
    CHECK(ac.coefficientsFor(s.values(unit)).has_value());
  }
}

TEST_CASE("condition report closes over the implication lattice") {
  ConditionReport cr = conditionReport(makeAnchoredBand(AnchoredBandParams{}));
  for (const std::string& key : conditionOrder()) {
    REQUIRE(cr.conditions.count(key) == 1);
    CHECK(!cr.conditions.at(key).method.empty());
  }
  CHECK(cr.conditions.at(kCondInjective).isTrue());
  CHECK(cr.conditions.at(kCondSimplicial).isTrue());
  CHECK(cr.conditions.at(kCondFunctionallySimplicial).isTrue());
  CHECK(cr.conditions.at(kCondTrivialAnnihilators).isFalse());
  CHECK(cr.conditions.at(kCondSimplexoid).isTrue());
  CHECK(cr.conditions.at(kCondCrossPolytope).isFalse());
  CHECK(cr.boundary.complete);
}

TEST_CASE("condition report on the cross-polytope-but-not-injective space") {
  ConditionReport cr = conditionReport(makeTwoPoint());
  CHECK(cr.conditions.at(kCondInjective).isFalse());
  CHECK(cr.conditions.at(kCondSimplicial).isFalse());
  CHECK(cr.conditions.at(kCondSimplexoid).isTrue());
  CHECK(cr.conditions.at(kCondCrossPolytope).isTrue());
}
