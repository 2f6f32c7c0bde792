#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "choquet/error.hpp"
#include "choquet/gallery.hpp"

using namespace choquet;

namespace {

Scalar cplx(Rat re, Rat im) { return Scalar(std::move(re), std::move(im)); }

bool failsWith(const std::function<void()>& f, const std::string& code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<Scalar> comboRow(const FunctionSpace& s,
                             const std::vector<std::pair<std::string, Scalar>>& terms) {
  std::vector<Scalar> out(s.m(), Scalar());
  for (const auto& [label, c] : terms) {
    const auto& row = s.row(s.K.index(label));
    for (size_t j = 0; j < s.m(); ++j) out[j] = out[j] + c * row[j];
  }
  return out;
}

} // namespace

TEST_CASE("interval spaces: labels, dimensions and endpoint couplings") {
  FunctionSpace s1 = makeIntervalSpace(1, 4);
  CHECK(s1.n() == 5);
  CHECK(s1.m() == 4);
  CHECK(s1.K.labels == std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
  CHECK(!s1.containsConstants);
  // the pinned endpoint has the zero row
  for (const Scalar& v : s1.row(s1.K.index("0"))) CHECK(v.isZero());

  FunctionSpace s2 = makeIntervalSpace(2, 3, Scalar(Rat(-1)));
  CHECK(s2.row(s2.K.index("1")) == comboRow(s2, {{"0", Scalar(Rat(-1))}}));
  CHECK(!s2.containsConstants);

  FunctionSpace s3 = makeIntervalSpace(3, 3, Scalar(Rat(1, 2)));
  CHECK(s3.row(s3.K.index("1")) == comboRow(s3, {{"0", Scalar(Rat(1, 2))}}));
}

TEST_CASE("interval space guards") {
  CHECK(failsWith([] { makeIntervalSpace(4, 4); }, "BadParam"));
  CHECK(failsWith([] { makeIntervalSpace(1, 0); }, "BadParam"));
  // variant 2 wants a unimodular coupling other than 1
  CHECK(failsWith([] { makeIntervalSpace(2, 4, Scalar(1)); }, "BadParam"));
  CHECK(failsWith([] { makeIntervalSpace(2, 4, Scalar(Rat(1, 2))); }, "BadParam"));
  // variant 3 wants modulus strictly inside the unit interval
  CHECK(failsWith([] { makeIntervalSpace(3, 4, Scalar(Rat(3, 2))); }, "BadParam"));
  CHECK(failsWith([] { makeIntervalSpace(3, 4, Scalar()); }, "BadParam"));
  // complex coupling needs the complex field
  CHECK(failsWith(
      [] { makeIntervalSpace(2, 4, cplx(Rat(0), Rat(1)), Field::Real); },
      "BadParam"));
  FunctionSpace rot = makeIntervalSpace(2, 4, cplx(Rat(0), Rat(1)), Field::Complex);
  CHECK(rot.field == Field::Complex);
}

TEST_CASE("anchored band: rows satisfy the defining relations") {
  AnchoredBandParams p; // variant 1, grid 2, alpha 1/4, beta 1/2
  FunctionSpace s = makeAnchoredBand(p);
  CHECK(s.n() == 11);
  CHECK(s.m() == 7);
  CHECK(!s.containsConstants);
  CHECK(s.name == "band1(g=2,a=1/4,b=1/2)");

  for (const std::string& t : {"0", "1/2", "1"}) {
    auto avg = comboRow(s, {{"(" + t + ",-1)", Scalar(Rat(1, 2))},
                            {"(" + t + ",1)", Scalar(Rat(1, 2))}});
    CHECK(s.row(s.K.index("(" + t + ",0)")) == avg);
  }
  auto anchored = comboRow(s, {{"a", Scalar(Rat(1, 4))}, {"b", Scalar(Rat(1, 2))}});
  CHECK(s.row(s.K.index("(0,0)")) == anchored);
}

TEST_CASE("anchored band variant 2 widens the columns") {
  AnchoredBandParams p;
  p.variant = 2;
  FunctionSpace s = makeAnchoredBand(p);
  // 5 rows per column value s in {-1,-1/2,0,1/2,1}, 3 columns, 2 anchors
  CHECK(s.n() == 17);
  CHECK(s.K.has("(1/2,-1/2)"));
  auto avg = comboRow(s, {{"(1,-1)", Scalar(Rat(1, 2))}, {"(1,1)", Scalar(Rat(1, 2))}});
  CHECK(s.row(s.K.index("(1,0)")) == avg);
}

TEST_CASE("anchored band guards") {
  auto with = [](const Scalar& a, const Scalar& b, Field f = Field::Real) {
    AnchoredBandParams p;
    p.alpha = a;
    p.beta = b;
    p.field = f;
    return makeAnchoredBand(p);
  };
  CHECK(failsWith([&] { with(Scalar(), Scalar(Rat(1, 2))); }, "BadParam"));
  CHECK(failsWith([&] { with(Scalar(Rat(1, 2)), Scalar(Rat(1, 2))); }, "BadParam"));
  CHECK(failsWith([&] { with(Scalar(Rat(3, 4)), Scalar(Rat(1, 2))); }, "BadParam"));
  CHECK(failsWith([&] { with(cplx(Rat(0), Rat(1, 4)), Scalar(Rat(1, 2))); }, "BadParam"));
  // |i/2| + |1/2| = 1 exactly: rejected in the complex field too
  CHECK(failsWith(
      [&] { with(cplx(Rat(0), Rat(1, 2)), Scalar(Rat(1, 2)), Field::Complex); },
      "BadParam"));
  // irrational moduli summing below 1 pass: (1+i)/4 has modulus sqrt(2)/4
  FunctionSpace ok = with(cplx(Rat(1, 4), Rat(1, 4)), Scalar(Rat(1, 2)), Field::Complex);
  CHECK(ok.field == Field::Complex);
}

TEST_CASE("porcupines glue quill averages over the spine") {
  FunctionSpace s = makePorcupine({"0", "1", "2"}, {"1"});
  CHECK(s.name == "porcupine(|L|=3,|A|=1)");
  CHECK(s.K.labels ==
        std::vector<std::string>{"(0,0)", "(1,-1)", "(1,0)", "(1,1)", "(2,0)"});
  CHECK(s.containsConstants);
  auto avg = comboRow(s, {{"(1,-1)", Scalar(Rat(1, 2))}, {"(1,1)", Scalar(Rat(1, 2))}});
  CHECK(s.row(s.K.index("(1,0)")) == avg);

  CHECK(failsWith([] { makePorcupine({"0", "1"}, {}); }, "EmptyA"));
  CHECK(failsWith([] { makePorcupine({"0"}, {"0"}); }, "BadParam"));
  CHECK(failsWith([] { makePorcupine({"0", "1"}, {"7"}); }, "BadParam"));
}

TEST_CASE("fixed gallery spaces carry the advertised constants flag") {
  CHECK(makeSquareAffine().containsConstants);
  CHECK(makeBalancedPairSpace(1, Field::Real).containsConstants);
  CHECK(!makeTwoPoint().containsConstants);
  CHECK(!makeIntervalSpace(1, 3).containsConstants);
  CHECK(!makeIntervalSpace(2, 3, Scalar(Rat(-1))).containsConstants);
  AnchoredBandParams p;
  CHECK(!makeAnchoredBand(p).containsConstants);
}

TEST_CASE("four-point decision separates distinct from equal anchor weights") {
  Verdict yes = anchoredBandFourPointDecision(Scalar(Rat(1, 4)), Scalar(Rat(1, 2)),
                                              Field::Real);
  CHECK(yes.isTrue());

  Verdict no = anchoredBandFourPointDecision(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)),
                                             Field::Real);
  REQUIRE(no.isFalse());
  CHECK(verifyFourPointWitness(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)), no.witness));

  // tampering with the witness breaks it
  json broken = no.witness;
  broken["x"][0] = "2";
  CHECK(!verifyFourPointWitness(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)), broken));
}

TEST_CASE("four-point decision in the complex field") {
  // distinct positive real weights transfer
  Verdict transfer = anchoredBandFourPointDecision(Scalar(Rat(1, 4)), Scalar(Rat(1, 2)),
                                                   Field::Complex);
  CHECK(transfer.isTrue());
  CHECK(transfer.method == "real-parameter-transfer");

  // a real witness survives complexification
  Verdict no = anchoredBandFourPointDecision(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)),
                                             Field::Complex);
  CHECK(no.isFalse());

  // equal moduli around the circle: i/3 and 1/3
  Verdict spin = anchoredBandFourPointDecision(cplx(Rat(0), Rat(1, 3)), Scalar(Rat(1, 3)),
                                               Field::Complex);
  REQUIRE(spin.isFalse());
  CHECK(spin.method == "equal-modulus-shift");
  CHECK(verifyFourPointWitness(cplx(Rat(0), Rat(1, 3)), Scalar(Rat(1, 3)), spin.witness));

  // a Pythagorean pair with equal moduli away from the axes
  Scalar a = cplx(Rat(3, 25), Rat(4, 25)); // modulus 1/5
  Verdict spun = anchoredBandFourPointDecision(a, Scalar(Rat(-1, 5)), Field::Complex);
  REQUIRE(spun.isFalse());
  CHECK(verifyFourPointWitness(a, Scalar(Rat(-1, 5)), spun.witness));

  // moduli that differ and are not both real stay undecided
  Verdict open = anchoredBandFourPointDecision(cplx(Rat(0), Rat(1, 4)), Scalar(Rat(1, 2)),
                                               Field::Complex);
  CHECK(open.status == Status::Unknown);

  // guards
  CHECK(failsWith(
      [] {
        anchoredBandFourPointDecision(Scalar(Rat(1, 2)), Scalar(Rat(1, 2)), Field::Real);
      },
      "BadParam"));
  CHECK(failsWith(
      [] {
        anchoredBandFourPointDecision(cplx(Rat(0), Rat(1, 4)), Scalar(Rat(1, 2)),
                                      Field::Real);
      },
      "BadParam"));
}

TEST_CASE("modulus shift bound on and off the real axis") {
  // on-axis plateau cases: the bound holds with equality
  ShiftBoundResult plateau1 = modulusShiftBound(Scalar(1), Rat(2), Rat(3));
  CHECK(plateau1.holds);
  CHECK(!plateau1.strict);
  ShiftBoundResult plateau2 = modulusShiftBound(Scalar(Rat(-1)), Rat(1), Rat(5));
  CHECK(plateau2.holds);
  CHECK(!plateau2.strict);

  // off-axis: strict
  ShiftBoundResult offAxis = modulusShiftBound(cplx(Rat(3, 5), Rat(4, 5)), Rat(1), Rat(1));
  CHECK(offAxis.holds);
  CHECK(offAxis.strict);

  // strict even on-axis when the shift overshoots the mass
  ShiftBoundResult overshoot = modulusShiftBound(Scalar(1), Rat(2), Rat(0));
  CHECK(overshoot.holds);
  CHECK(overshoot.strict);

  // t = 0 with gamma aligned against z = 1 is the other plateau
  ShiftBoundResult atZero = modulusShiftBound(Scalar(Rat(-1)), Rat(2), Rat(0));
  CHECK(atZero.holds);
  CHECK(!atZero.strict);

  CHECK(failsWith([] { modulusShiftBound(Scalar(Rat(1, 2)), Rat(1), Rat(1)); },
                  "BadParam"));
  CHECK(failsWith([] { modulusShiftBound(Scalar(1), Rat(0), Rat(1)); }, "BadParam"));
  CHECK(failsWith([] { modulusShiftBound(Scalar(1), Rat(1), Rat(-1)); }, "BadParam"));
}

TEST_CASE("random spaces are deterministic, separating and well-formed") {
  FunctionSpace a = randomSpace(5, 3, 42);
  FunctionSpace b = randomSpace(5, 3, 42);
  CHECK(a.K.labels == b.K.labels);
  CHECK(a.E == b.E);
  FunctionSpace c = randomSpace(5, 3, 43);
  CHECK(a.E != c.E);

  // rows pairwise distinct (makeSpace enforced it; spot-check anyway)
  std::set<std::vector<std::string>> seen;
  for (size_t x = 0; x < a.n(); ++x) {
    std::vector<std::string> key;
    for (const Scalar& v : a.row(x)) key.push_back(scalarToString(v));
    CHECK(seen.insert(key).second);
  }

  RandomSpaceOptions opt;
  opt.forceConstants = true;
  FunctionSpace withOnes = randomSpace(6, 3, 7, opt);
  CHECK(withOnes.containsConstants);

  RandomSpaceOptions cplxOpt;
  cplxOpt.field = Field::Complex;
  FunctionSpace z = randomSpace(4, 2, 11, cplxOpt);
  CHECK(z.field == Field::Complex);
  bool anyImaginary = false;
  for (size_t x = 0; x < z.n(); ++x)
    for (const Scalar& v : z.row(x)) anyImaginary = anyImaginary || sgn(v.im) != 0;
  CHECK(anyImaginary);

  CHECK(failsWith([] { randomSpace(5, 1, 0); }, "BadParam"));
  CHECK(failsWith([] { randomSpace(3, 4, 0); }, "BadParam"));
  CHECK(failsWith([] { randomSpace(11, 3, 0); }, "BadParam"));
}
