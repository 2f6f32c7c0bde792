#pragma once

#include <deque>
#include <vector>

#include "choquet/scalar.hpp"

namespace choquet {

// min/max c.x  s.t.  eqA x = eqB,  leA x <= leB,  x_j >= 0 where nonneg[j].
// Variables without a nonneg flag are free. All data rational.
// Rows live in deques so a reference handed out by newEqRow/newLeRow stays
// valid while further rows are appended.
struct LinearProgram {
  size_t nvars = 0;
  std::deque<std::vector<Rat>> eqA;
  std::vector<Rat> eqB;
  std::deque<std::vector<Rat>> leA;
  std::vector<Rat> leB;
  std::vector<Rat> objective; // empty = feasibility (zero objective)
  bool maximize = false;
  std::vector<bool> nonneg; // empty = all free

  std::vector<Rat>& newEqRow(const Rat& rhs);
  std::vector<Rat>& newLeRow(const Rat& rhs);
};

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;

  // Optimal
  Rat value;
  std::vector<Rat> x;
  std::vector<Rat> eqDual; // free sign
  std::vector<Rat> leDual; // <= 0 in min convention

  // Unbounded: feasible point x plus an improving ray
  std::vector<Rat> ray;

  // Infeasible: Farkas multipliers on the original rows
  std::vector<Rat> farkasEq;
  std::vector<Rat> farkasLe; // <= 0
};

LPResult lpSolve(const LinearProgram& lp);

// Exact re-checks of the emitted certificates (used by tests and `verify`).
bool checkOptimalCertificate(const LinearProgram& lp, const LPResult& r);
bool checkFarkasCertificate(const LinearProgram& lp, const LPResult& r);
bool checkRayCertificate(const LinearProgram& lp, const LPResult& r);

} // namespace choquet
