#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "choquet/linprog.hpp"

using namespace choquet;

TEST_CASE("known optimum: transportation toy problem") {
  // min 2x + 3y  s.t.  x + y = 4, x <= 3, x,y >= 0  ->  x = 3, y = 1, value 9
  LinearProgram lp;
  lp.nvars = 2;
  lp.nonneg = {true, true};
  lp.objective = {Rat(2), Rat(3)};
  {
    auto& eq = lp.newEqRow(Rat(4));
    eq[0] = Rat(1);
    eq[1] = Rat(1);
  }
  {
    auto& le = lp.newLeRow(Rat(3));
    le[0] = Rat(1);
  }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.value == Rat(9));
  CHECK(r.x == std::vector<Rat>{Rat(3), Rat(1)});
  CHECK(checkOptimalCertificate(lp, r));
}

TEST_CASE("maximization with free variables") {
  // max x - y  s.t.  -1 <= x <= 2, 0 <= y, x + y <= 3  ->  x = 2, y = 0
  LinearProgram lp;
  lp.nvars = 2;
  lp.nonneg = {false, true};
  lp.maximize = true;
  lp.objective = {Rat(1), Rat(-1)};
  { auto& a = lp.newLeRow(Rat(2)); a[0] = Rat(1); }
  { auto& b = lp.newLeRow(Rat(1)); b[0] = Rat(-1); }
  { auto& c = lp.newLeRow(Rat(3)); c[0] = Rat(1); c[1] = Rat(1); }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.value == Rat(2));
  CHECK(checkOptimalCertificate(lp, r));
}

TEST_CASE("infeasible systems come back with a Farkas certificate") {
  // x >= 0, x <= -1
  LinearProgram lp;
  lp.nvars = 1;
  lp.nonneg = {true};
  { auto& a = lp.newLeRow(Rat(-1)); a[0] = Rat(1); }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Infeasible);
  CHECK(checkFarkasCertificate(lp, r));

  // inconsistent equalities on free variables
  LinearProgram lp2;
  lp2.nvars = 2;
  { auto& a = lp2.newEqRow(Rat(1)); a[0] = Rat(1); a[1] = Rat(1); }
  { auto& b = lp2.newEqRow(Rat(3)); b[0] = Rat(1); b[1] = Rat(1); }
  auto r2 = lpSolve(lp2);
  REQUIRE(r2.status == LPResult::Status::Infeasible);
  CHECK(checkFarkasCertificate(lp2, r2));
}

TEST_CASE("unbounded problems expose an improving ray") {
  // max x, x free, only x >= -5 constrains it
  LinearProgram lp;
  lp.nvars = 1;
  lp.maximize = true;
  lp.objective = {Rat(1)};
  { auto& a = lp.newLeRow(Rat(5)); a[0] = Rat(-1); }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Unbounded);
  CHECK(checkRayCertificate(lp, r));
}

TEST_CASE("pure feasibility runs with an empty objective") {
  LinearProgram lp;
  lp.nvars = 3;
  lp.nonneg = {true, true, true};
  {
    auto& eq = lp.newEqRow(Rat(1));
    eq[0] = Rat(1);
    eq[1] = Rat(1);
    eq[2] = Rat(1);
  }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  Rat total = r.x[0] + r.x[1] + r.x[2];
  CHECK(total == Rat(1));
  for (const Rat& v : r.x) CHECK(v >= 0);
}

TEST_CASE("degenerate and rank-deficient rows are handled") {
  // duplicated equality rows must not break the solver
  LinearProgram lp;
  lp.nvars = 2;
  lp.nonneg = {true, true};
  lp.objective = {Rat(1), Rat(1)};
  { auto& a = lp.newEqRow(Rat(2)); a[0] = Rat(1); a[1] = Rat(1); }
  { auto& b = lp.newEqRow(Rat(2)); b[0] = Rat(1); b[1] = Rat(1); }
  { auto& c = lp.newEqRow(Rat(4)); c[0] = Rat(2); c[1] = Rat(2); }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.value == Rat(2));
}

TEST_CASE("row references stay valid while more rows are appended") {
  // the row builders hand out references; appending must not invalidate them
  LinearProgram lp;
  lp.nvars = 4;
  auto& first = lp.newEqRow(Rat(7));
  auto& firstLe = lp.newLeRow(Rat(9));
  for (int i = 0; i < 200; ++i) {
    lp.newEqRow(Rat(i));
    lp.newLeRow(Rat(i));
  }
  first[2] = Rat(5);
  firstLe[3] = Rat(-5);
  CHECK(lp.eqA.front()[2] == Rat(5));
  CHECK(lp.eqB.front() == Rat(7));
  CHECK(lp.leA.front()[3] == Rat(-5));
  CHECK(lp.leB.front() == Rat(9));
  CHECK(lp.eqA.size() == 201);
  CHECK(lp.leA.size() == 201);
}

TEST_CASE("random programs always deliver checkable certificates") {
  std::mt19937_64 rng(20260823);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int iter = 0; iter < 120; ++iter) {
    LinearProgram lp;
    lp.nvars = 1 + static_cast<size_t>(rng() % 4);
    lp.nonneg.assign(lp.nvars, false);
    for (size_t j = 0; j < lp.nvars; ++j) lp.nonneg[j] = (rng() % 2) == 0;
    lp.maximize = (rng() % 2) == 0;
    lp.objective.assign(lp.nvars, Rat(0));
    for (size_t j = 0; j < lp.nvars; ++j)
      lp.objective[j] = Rat(static_cast<long>(rng() % 7) - 3);
    size_t eqs = rng() % 3, les = rng() % 4;
    for (size_t i = 0; i < eqs; ++i) {
      auto& row = lp.newEqRow(Rat(static_cast<long>(rng() % 9) - 4));
      for (size_t j = 0; j < lp.nvars; ++j)
        row[j] = Rat(static_cast<long>(rng() % 7) - 3);
    }
    for (size_t i = 0; i < les; ++i) {
      auto& row = lp.newLeRow(Rat(static_cast<long>(rng() % 9) - 4));
      for (size_t j = 0; j < lp.nvars; ++j)
        row[j] = Rat(static_cast<long>(rng() % 7) - 3);
    }
    auto r = lpSolve(lp);
    switch (r.status) {
      case LPResult::Status::Optimal:
        ++optimal;
        CHECK(checkOptimalCertificate(lp, r));
        break;
      case LPResult::Status::Infeasible:
        ++infeasible;
        CHECK(checkFarkasCertificate(lp, r));
        break;
      case LPResult::Status::Unbounded:
        ++unbounded;
        CHECK(checkRayCertificate(lp, r));
        break;
    }
  }
  // the generator must actually exercise all three outcomes
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}

TEST_CASE("rational data with large denominators stays exact") {
  LinearProgram lp;
  lp.nvars = 2;
  lp.nonneg = {true, true};
  lp.objective = {Rat(1, 999983), Rat(1, 999979)};
  {
    auto& eq = lp.newEqRow(Rat(1));
    eq[0] = Rat(999983, 7);
    eq[1] = Rat(0);
  }
  auto r = lpSolve(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.x[0] == Rat(7, 999983));
  CHECK(r.value == Rat(7) / (Rat(999983) * Rat(999983)));
  CHECK(checkOptimalCertificate(lp, r));
}
