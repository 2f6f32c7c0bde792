#include "choquet/linprog.hpp"

#include <algorithm>
#include <optional>

#include "choquet/error.hpp"

namespace choquet {

std::vector<Rat>& LinearProgram::newEqRow(const Rat& rhs) {
  eqA.emplace_back(nvars, Rat(0));
  eqB.push_back(rhs);
  return eqA.back();
}

std::vector<Rat>& LinearProgram::newLeRow(const Rat& rhs) {
  leA.emplace_back(nvars, Rat(0));
  leB.push_back(rhs);
  return leA.back();
}

namespace {

// Dense tableau over the rationals. Columns are laid out as
//   [structural (split for free vars)] [slacks] [artificials]
// and rows are the equality rows followed by the inequality rows,
// sign-flipped so every right-hand side is nonnegative.
struct Tableau {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<size_t> basis;

  void pivot(size_t r, size_t c) {
    Rat piv = a[r][c];
    for (auto& v : a[r]) v /= piv;
    b[r] /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = a[i][c];
      if (sgn(f) == 0) continue;
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }
};

// Reduced costs of `cost` against the current basis.
std::vector<Rat> reducedCosts(const Tableau& t, const std::vector<Rat>& cost) {
  std::vector<Rat> rc = cost;
  for (size_t i = 0; i < t.rows; ++i) {
    const Rat& cb = cost[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (size_t j = 0; j < t.cols; ++j) rc[j] -= cb * t.a[i][j];
  }
  return rc;
}

Rat basisObjective(const Tableau& t, const std::vector<Rat>& cost) {
  Rat v(0);
  for (size_t i = 0; i < t.rows; ++i) v += cost[t.basis[i]] * t.b[i];
  return v;
}

// Bland's rule: lowest eligible entering column, lowest basic index on ratio
// ties. Returns the entering column if the problem is unbounded, nullopt at
// optimality. `limit` excludes columns >= limit from entering.
std::optional<size_t> simplexLoop(Tableau& t, const std::vector<Rat>& cost, size_t limit) {
  std::vector<Rat> rc = reducedCosts(t, cost);
  for (;;) {
    size_t enter = limit;
    for (size_t j = 0; j < limit; ++j)
      if (sgn(rc[j]) < 0) { enter = j; break; }
    if (enter == limit) return std::nullopt;

    size_t leave = t.rows;
    Rat bestNum, bestDen;
    for (size_t i = 0; i < t.rows; ++i) {
      if (sgn(t.a[i][enter]) <= 0) continue;
      bool better;
      if (leave == t.rows) {
        better = true;
      } else {
        int cmp = sgn(t.b[i] * bestDen - bestNum * t.a[i][enter]);
        better = cmp < 0 || (cmp == 0 && t.basis[i] < t.basis[leave]);
      }
      if (better) { leave = i; bestNum = t.b[i]; bestDen = t.a[i][enter]; }
    }
    if (leave == t.rows) return enter; // unbounded direction

    t.pivot(leave, enter);
    Rat f = rc[enter];
    for (size_t j = 0; j < t.cols; ++j) rc[j] -= f * t.a[leave][j];
  }
}

} // namespace

LPResult lpSolve(const LinearProgram& lp) {
  const size_t nv = lp.nvars;
  if (!lp.objective.empty() && lp.objective.size() != nv)
    fail("DimensionMismatch", "objective length does not match variable count");
  if (!lp.nonneg.empty() && lp.nonneg.size() != nv)
    fail("DimensionMismatch", "nonneg flag length does not match variable count");
  auto isNonneg = [&](size_t j) { return !lp.nonneg.empty() && lp.nonneg[j]; };
  auto objCoeff = [&](size_t j) {
    if (lp.objective.empty()) return Rat(0);
    return lp.maximize ? Rat(-lp.objective[j]) : lp.objective[j];
  };

  const size_t neq = lp.eqA.size(), nle = lp.leA.size();
  const size_t nrows = neq + nle;
  for (size_t i = 0; i < neq; ++i)
    if (lp.eqA[i].size() != nv) fail("DimensionMismatch", "equality row has wrong length");
  for (size_t i = 0; i < nle; ++i)
    if (lp.leA[i].size() != nv) fail("DimensionMismatch", "inequality row has wrong length");

  // Column layout. Free variables are split into positive and negative parts.
  std::vector<size_t> posCol(nv), negCol(nv, SIZE_MAX);
  size_t nc = 0;
  for (size_t j = 0; j < nv; ++j) {
    posCol[j] = nc++;
    if (!isNonneg(j)) negCol[j] = nc++;
  }
  const size_t slack0 = nc;
  nc += nle;
  const size_t art0 = nc;
  nc += nrows;

  Tableau t;
  t.rows = nrows;
  t.cols = nc;
  t.a.assign(nrows, std::vector<Rat>(nc, Rat(0)));
  t.b.assign(nrows, Rat(0));
  t.basis.assign(nrows, 0);

  std::vector<int> flip(nrows, 1);
  auto loadRow = [&](size_t r, const std::vector<Rat>& coeffs, const Rat& rhs) {
    int f = sgn(rhs) < 0 ? -1 : 1;
    flip[r] = f;
    for (size_t j = 0; j < nv; ++j) {
      Rat v = f < 0 ? Rat(-coeffs[j]) : coeffs[j];
      t.a[r][posCol[j]] = v;
      if (negCol[j] != SIZE_MAX) t.a[r][negCol[j]] = -v;
    }
    t.b[r] = f < 0 ? Rat(-rhs) : rhs;
  };
  for (size_t i = 0; i < neq; ++i) loadRow(i, lp.eqA[i], lp.eqB[i]);
  for (size_t i = 0; i < nle; ++i) {
    loadRow(neq + i, lp.leA[i], lp.leB[i]);
    t.a[neq + i][slack0 + i] = Rat(flip[neq + i]);
  }
  for (size_t r = 0; r < nrows; ++r) {
    t.a[r][art0 + r] = Rat(1);
    t.basis[r] = art0 + r;
  }

  LPResult res;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> cost1(nc, Rat(0));
  for (size_t r = 0; r < nrows; ++r) cost1[art0 + r] = Rat(1);
  auto unb1 = simplexLoop(t, cost1, nc);
  if (unb1) fail("InternalInconsistency", "phase-1 problem cannot be unbounded");
  Rat w = basisObjective(t, cost1);
  if (sgn(w) > 0) {
    res.status = LPResult::Status::Infeasible;
    std::vector<Rat> rc = reducedCosts(t, cost1);
    res.farkasEq.assign(neq, Rat(0));
    res.farkasLe.assign(nle, Rat(0));
    for (size_t r = 0; r < nrows; ++r) {
      Rat y = Rat(1) - rc[art0 + r]; // cost[art_r] - rc[art_r]
      Rat u = Rat(flip[r]) * y;
      if (r < neq) res.farkasEq[r] = u;
      else res.farkasLe[r - neq] = u;
    }
    return res;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // redundant (their dual weight is zero) and are dropped.
  std::vector<size_t> keptRow; // tableau row -> original row index
  for (size_t r = 0; r < nrows; ++r) keptRow.push_back(r);
  for (size_t r = 0; r < t.rows;) {
    if (t.basis[r] < art0) { ++r; continue; }
    size_t c = art0;
    for (size_t j = 0; j < art0; ++j)
      if (sgn(t.a[r][j]) != 0) { c = j; break; }
    if (c < art0) {
      t.pivot(r, c);
      ++r;
    } else {
      t.a.erase(t.a.begin() + r);
      t.b.erase(t.b.begin() + r);
      t.basis.erase(t.basis.begin() + r);
      keptRow.erase(keptRow.begin() + r);
      --t.rows;
    }
  }

  // Phase 2: artificial columns are barred from entering.
  std::vector<Rat> cost2(nc, Rat(0));
  for (size_t j = 0; j < nv; ++j) {
    Rat c = objCoeff(j);
    cost2[posCol[j]] = c;
    if (negCol[j] != SIZE_MAX) cost2[negCol[j]] = -c;
  }
  auto unb2 = simplexLoop(t, cost2, art0);

  auto extractX = [&]() {
    std::vector<Rat> x(nv, Rat(0));
    std::vector<Rat> z(nc, Rat(0));
    for (size_t i = 0; i < t.rows; ++i) z[t.basis[i]] = t.b[i];
    for (size_t j = 0; j < nv; ++j) {
      x[j] = z[posCol[j]];
      if (negCol[j] != SIZE_MAX) x[j] -= z[negCol[j]];
    }
    return x;
  };

  if (unb2) {
    res.status = LPResult::Status::Unbounded;
    res.x = extractX();
    std::vector<Rat> d(nc, Rat(0));
    d[*unb2] = Rat(1);
    for (size_t i = 0; i < t.rows; ++i) d[t.basis[i]] = -t.a[i][*unb2];
    res.ray.assign(nv, Rat(0));
    for (size_t j = 0; j < nv; ++j) {
      res.ray[j] = d[posCol[j]];
      if (negCol[j] != SIZE_MAX) res.ray[j] -= d[negCol[j]];
    }
    return res;
  }

  res.status = LPResult::Status::Optimal;
  res.x = extractX();
  Rat v = basisObjective(t, cost2);
  res.value = lp.maximize ? Rat(-v) : v;

  std::vector<Rat> rc = reducedCosts(t, cost2);
  res.eqDual.assign(neq, Rat(0));
  res.leDual.assign(nle, Rat(0));
  for (size_t i = 0; i < t.rows; ++i) {
    size_t r = keptRow[i];
    Rat y = -rc[art0 + r]; // phase-2 artificial cost is zero
    Rat u = Rat(flip[r]) * y;
    if (lp.maximize) u = -u;
    if (r < neq) res.eqDual[r] = u;
    else res.leDual[r - neq] = u;
  }
  return res;
}

namespace {

std::vector<Rat> comboRow(const LinearProgram& lp, const std::vector<Rat>& ue,
                          const std::vector<Rat>& ul) {
  std::vector<Rat> s(lp.nvars, Rat(0));
  for (size_t i = 0; i < lp.eqA.size(); ++i)
    for (size_t j = 0; j < lp.nvars; ++j) s[j] += ue[i] * lp.eqA[i][j];
  for (size_t i = 0; i < lp.leA.size(); ++i)
    for (size_t j = 0; j < lp.nvars; ++j) s[j] += ul[i] * lp.leA[i][j];
  return s;
}

bool primalFeasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.nvars) return false;
  for (size_t j = 0; j < lp.nvars; ++j)
    if (!lp.nonneg.empty() && lp.nonneg[j] && sgn(x[j]) < 0) return false;
  for (size_t i = 0; i < lp.eqA.size(); ++i) {
    Rat s(0);
    for (size_t j = 0; j < lp.nvars; ++j) s += lp.eqA[i][j] * x[j];
    if (s != lp.eqB[i]) return false;
  }
  for (size_t i = 0; i < lp.leA.size(); ++i) {
    Rat s(0);
    for (size_t j = 0; j < lp.nvars; ++j) s += lp.leA[i][j] * x[j];
    if (s > lp.leB[i]) return false;
  }
  return true;
}

} // namespace

bool checkOptimalCertificate(const LinearProgram& lp, const LPResult& r) {
  if (r.status != LPResult::Status::Optimal) return false;
  if (!primalFeasible(lp, r.x)) return false;
  Rat cx(0);
  for (size_t j = 0; j < lp.nvars && j < lp.objective.size(); ++j)
    cx += lp.objective[j] * r.x[j];
  if (cx != r.value) return false;
  if (r.eqDual.size() != lp.eqA.size() || r.leDual.size() != lp.leA.size()) return false;

  // Dual feasibility: leDual <= 0 for min, >= 0 for max; the combined row
  // matches the objective on free variables and bounds it on nonneg ones.
  int dir = lp.maximize ? -1 : 1;
  for (const Rat& z : r.leDual)
    if (dir * sgn(z) > 0) return false;
  std::vector<Rat> s = comboRow(lp, r.eqDual, r.leDual);
  for (size_t j = 0; j < lp.nvars; ++j) {
    Rat cj = j < lp.objective.size() ? lp.objective[j] : Rat(0);
    bool nn = !lp.nonneg.empty() && lp.nonneg[j];
    if (nn) {
      if (dir * sgn(s[j] - cj) > 0) return false;
    } else if (s[j] != cj) {
      return false;
    }
  }
  Rat dualVal(0);
  for (size_t i = 0; i < lp.eqA.size(); ++i) dualVal += r.eqDual[i] * lp.eqB[i];
  for (size_t i = 0; i < lp.leA.size(); ++i) dualVal += r.leDual[i] * lp.leB[i];
  return dualVal == r.value;
}

bool checkFarkasCertificate(const LinearProgram& lp, const LPResult& r) {
  if (r.status != LPResult::Status::Infeasible) return false;
  if (r.farkasEq.size() != lp.eqA.size() || r.farkasLe.size() != lp.leA.size()) return false;
  for (const Rat& z : r.farkasLe)
    if (sgn(z) > 0) return false;
  std::vector<Rat> s = comboRow(lp, r.farkasEq, r.farkasLe);
  for (size_t j = 0; j < lp.nvars; ++j) {
    bool nn = !lp.nonneg.empty() && lp.nonneg[j];
    if (nn) {
      if (sgn(s[j]) > 0) return false;
    } else if (sgn(s[j]) != 0) {
      return false;
    }
  }
  Rat rhs(0);
  for (size_t i = 0; i < lp.eqA.size(); ++i) rhs += r.farkasEq[i] * lp.eqB[i];
  for (size_t i = 0; i < lp.leA.size(); ++i) rhs += r.farkasLe[i] * lp.leB[i];
  return sgn(rhs) > 0;
}

bool checkRayCertificate(const LinearProgram& lp, const LPResult& r) {
  if (r.status != LPResult::Status::Unbounded) return false;
  if (!primalFeasible(lp, r.x)) return false;
  if (r.ray.size() != lp.nvars) return false;
  for (size_t j = 0; j < lp.nvars; ++j)
    if (!lp.nonneg.empty() && lp.nonneg[j] && sgn(r.ray[j]) < 0) return false;
  for (size_t i = 0; i < lp.eqA.size(); ++i) {
    Rat s(0);
    for (size_t j = 0; j < lp.nvars; ++j) s += lp.eqA[i][j] * r.ray[j];
    if (sgn(s) != 0) return false;
  }
  for (size_t i = 0; i < lp.leA.size(); ++i) {
    Rat s(0);
    for (size_t j = 0; j < lp.nvars; ++j) s += lp.leA[i][j] * r.ray[j];
    if (sgn(s) > 0) return false;
  }
  Rat cd(0);
  for (size_t j = 0; j < lp.nvars && j < lp.objective.size(); ++j)
    cd += lp.objective[j] * r.ray[j];
  return lp.maximize ? sgn(cd) > 0 : sgn(cd) < 0;
}

} // namespace choquet
