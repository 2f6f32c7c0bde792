#include "choquet/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "choquet/error.hpp"
#include "choquet/linalg.hpp"
#include "choquet/linprog.hpp"

namespace choquet {

namespace {

const auto ratZero = [](const Rat& x) { return sgn(x) == 0; };

Rat dot(const RVec& a, const RVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scale a nonzero vector by a positive rational so its entries become
// coprime integers. Keeps coordinates small during the double description run.
void normalizePrimitive(RVec& v) {
  Int l(1);
  bool any = false;
  for (const Rat& x : v) {
    if (sgn(x) == 0) continue;
    any = true;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (!any) return;
  Rat scale(l);
  for (Rat& x : v) x *= scale;
  Int g(0);
  for (const Rat& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  if (sgn(Rat(g)) != 0 && g != 1) {
    Rat gr(g);
    for (Rat& x : v) x /= gr;
  }
}

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i / 64] |= (uint64_t(1) << (i % 64)); }
  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += size_t(__builtin_popcountll(x));
    return c;
  }
};

Bitset bitsetAnd(const Bitset& a, const Bitset& b) {
  Bitset r;
  r.w.resize(a.w.size());
  for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
  return r;
}

bool bitsetSubset(const Bitset& small, const Bitset& big) {
  for (size_t i = 0; i < small.w.size(); ++i)
    if (small.w[i] & ~big.w[i]) return false;
  return true;
}

struct DDRay {
  RVec u;
  Bitset act; // processed rows with row.u == 0
};

std::vector<size_t> independentRowSubset(const RMat& M, size_t dim) {
  std::vector<size_t> chosen;
  RMat ech;
  size_t rank = 0;
  for (size_t i = 0; i < M.size() && rank < dim; ++i) {
    RMat trial = ech;
    trial.push_back(M[i]);
    std::vector<size_t> pc;
    size_t r = rowEchelon(trial, pc, ratZero);
    if (r > rank) {
      rank = r;
      ech = std::move(trial);
      ech.resize(rank);
      chosen.push_back(i);
    }
  }
  if (rank < dim) chosen.clear();
  return chosen;
}

RMat invertMatrix(const RMat& B) {
  size_t d = B.size();
  RMat aug = B;
  for (size_t i = 0; i < d; ++i) {
    aug[i].resize(2 * d, Rat(0));
    aug[i][d + i] = Rat(1);
  }
  std::vector<size_t> pc;
  size_t r = rowEchelon(aug, pc, ratZero);
  if (r < d || pc.size() < d || pc[d - 1] != d - 1)
    fail("InternalInconsistency", "matrix inversion on singular input");
  RMat inv(d, RVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
  return inv;
}

} // namespace

RMat coneExtremeRays(const RMat& M, size_t dim, size_t budget) {
  if (dim == 0) fail("BadParam", "cone dimension must be positive");
  for (const RVec& row : M)
    if (row.size() != dim) fail("DimensionMismatch", "cone row has wrong length");

  std::vector<size_t> seed = independentRowSubset(M, dim);
  if (seed.empty())
    fail("DegenerateCone", "constraint rows do not have full rank; cone is not pointed");

  RMat B(dim);
  for (size_t i = 0; i < dim; ++i) B[i] = M[seed[i]];
  RMat Binv = invertMatrix(B);

  std::vector<bool> processed(M.size(), false);
  std::vector<size_t> processedList;
  for (size_t i : seed) processed[i] = true;

  std::vector<DDRay> rays;
  for (size_t j = 0; j < dim; ++j) {
    DDRay r;
    r.u.resize(dim);
    for (size_t i = 0; i < dim; ++i) r.u[i] = Binv[i][j];
    normalizePrimitive(r.u);
    rays.push_back(std::move(r));
  }
  auto recomputeActive = [&](DDRay& r) {
    r.act = Bitset(M.size());
    for (size_t k : processedList)
      if (sgn(dot(M[k], r.u)) == 0) r.act.set(k);
  };
  for (size_t i : seed) processedList.push_back(i);
  for (DDRay& r : rays) recomputeActive(r);

  for (size_t row = 0; row < M.size(); ++row) {
    if (processed[row]) continue;
    const RVec& a = M[row];
    std::vector<Rat> dots(rays.size());
    std::vector<int> s(rays.size());
    bool anyNeg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      dots[i] = dot(a, rays[i].u);
      s[i] = sgn(dots[i]);
      if (s[i] < 0) anyNeg = true;
    }
    processed[row] = true;
    processedList.push_back(row);
    if (!anyNeg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) rays[i].act.set(row);
      continue;
    }

    std::vector<size_t> plus, minus;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) plus.push_back(i);
      else if (s[i] < 0) minus.push_back(i);
    }

    std::vector<DDRay> created;
    for (size_t ip : plus) {
      for (size_t im : minus) {
        Bitset common = bitsetAnd(rays[ip].act, rays[im].act);
        if (dim >= 2 && common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (k == ip || k == im) continue;
          if (bitsetSubset(common, rays[k].act)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        DDRay nr;
        nr.u.resize(dim);
        for (size_t t = 0; t < dim; ++t)
          nr.u[t] = dots[ip] * rays[im].u[t] - dots[im] * rays[ip].u[t];
        normalizePrimitive(nr.u);
        created.push_back(std::move(nr));
      }
    }

    std::vector<DDRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      if (s[i] == 0) rays[i].act.set(row);
      next.push_back(std::move(rays[i]));
    }
    for (DDRay& r : created) {
      recomputeActive(r);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    if (rays.size() > budget)
      fail("RayBudgetExceeded", "extreme ray count exceeded the configured budget");
  }

  RMat out;
  out.reserve(rays.size());
  for (DDRay& r : rays) out.push_back(std::move(r.u));
  return out;
}

std::vector<Facet> facetEnumeration(const RMat& points, size_t dim, size_t budget) {
  if (points.empty()) fail("BadParam", "facet enumeration needs at least one point");
  for (const RVec& p : points)
    if (p.size() != dim) fail("DimensionMismatch", "point has wrong length");
  if (affineDimension(points) != dim)
    fail("DegenerateHull", "points do not affinely span the ambient space");

  RMat M;
  M.reserve(points.size());
  for (const RVec& p : points) {
    RVec row(dim + 1);
    for (size_t j = 0; j < dim; ++j) row[j] = -p[j];
    row[dim] = Rat(1);
    M.push_back(std::move(row));
  }
  RMat rays = coneExtremeRays(M, dim + 1, budget);

  std::vector<Facet> facets;
  for (const RVec& r : rays) {
    Facet f;
    f.normal.assign(r.begin(), r.begin() + dim);
    f.offset = r[dim];
    for (size_t i = 0; i < points.size(); ++i)
      if (dot(f.normal, points[i]) == f.offset) f.incident.push_back(i);
    facets.push_back(std::move(f));
  }
  return facets;
}

RMat standardFormVertices(const RMat& A, const RVec& b, size_t budget) {
  size_t rows = A.size();
  if (b.size() != rows) fail("DimensionMismatch", "rhs length does not match row count");
  if (rows == 0) fail("BadParam", "standard form needs at least one equality");
  size_t N = A[0].size();
  for (const RVec& r : A)
    if (r.size() != N) fail("DimensionMismatch", "ragged equality matrix");

  RMat D(rows, RVec(N + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < N; ++j) D[i][j] = A[i][j];
    D[i][N] = -b[i];
  }
  RMat NS = nullspaceBasis(D, N + 1, ratZero);
  if (NS.empty()) return {};
  size_t d = NS.size();

  // Coordinates of the homogenized feasible cone in the nullspace chart:
  // row i demands coordinate i of the combined vector to be >= 0.
  RMat M(N + 1, RVec(d));
  for (size_t i = 0; i <= N; ++i)
    for (size_t j = 0; j < d; ++j) M[i][j] = NS[j][i];

  RMat rays = coneExtremeRays(M, d, budget);
  RMat verts;
  for (const RVec& u : rays) {
    RVec z(N + 1, Rat(0));
    for (size_t i = 0; i <= N; ++i)
      for (size_t j = 0; j < d; ++j) z[i] += M[i][j] * u[j];
    if (sgn(z[N]) == 0)
      fail("UnboundedInput", "feasible set has a recession direction");
    RVec x(N);
    for (size_t i = 0; i < N; ++i) x[i] = z[i] / z[N];
    verts.push_back(std::move(x));
  }
  return verts;
}

bool inConvexHull(const RVec& v, const RMat& pts) {
  if (pts.empty()) return false;
  size_t dim = v.size();
  LinearProgram lp;
  lp.nvars = pts.size();
  lp.nonneg.assign(lp.nvars, true);
  for (size_t i = 0; i < dim; ++i) {
    auto& row = lp.newEqRow(v[i]);
    for (size_t k = 0; k < pts.size(); ++k) row[k] = pts[k][i];
  }
  auto& one = lp.newEqRow(Rat(1));
  std::fill(one.begin(), one.end(), Rat(1));
  return lpSolve(lp).status == LPResult::Status::Optimal;
}

bool inAbsoluteHull(const RVec& v, const RMat& pts) {
  if (pts.empty()) {
    for (const Rat& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  size_t dim = v.size(), k = pts.size();
  LinearProgram lp;
  lp.nvars = 2 * k;
  lp.nonneg.assign(lp.nvars, true);
  for (size_t i = 0; i < dim; ++i) {
    auto& row = lp.newEqRow(v[i]);
    for (size_t j = 0; j < k; ++j) {
      row[j] = pts[j][i];
      row[k + j] = -pts[j][i];
    }
  }
  auto& mass = lp.newLeRow(Rat(1));
  std::fill(mass.begin(), mass.end(), Rat(1));
  return lpSolve(lp).status == LPResult::Status::Optimal;
}

size_t affineDimension(const RMat& pts) {
  if (pts.empty()) fail("BadParam", "affine dimension of an empty set");
  RMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RVec d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return matrixRank(diffs, ratZero);
}

PhaseGrid buildPhaseGrid(size_t n) {
  if (n < 4 || n > 65536)
    fail("BadParam", "phase grid size must be between 4 and 65536");

  const Rat quarterWidth(1, Int(1) << 40);
  RatInterval pi = piEnclosure();
  RatInterval target = cosEnclosure(
      RatInterval{pi.lo / Rat(Int(n)) , pi.hi / Rat(Int(n))}, quarterWidth);

  // Quadrant resolution: a power of two, so the grids for any two sizes are
  // nested (a coarser tan-half-angle grid is a subset of every finer one).
  // The extra doubling keeps the largest angular gap safely below 2*pi/n.
  size_t quadrant = 2;
  while (quadrant < (n + 3) / 4) quadrant *= 2;
  quadrant *= 2;

  for (int attempt = 0; attempt < 8; ++attempt, quadrant *= 2) {
    std::vector<Scalar> pts;
    pts.reserve(4 * quadrant);
    for (size_t k = 0; k < quadrant; ++k) {
      Rat q{Int(static_cast<long>(k)), Int(static_cast<long>(quadrant))};
      q.canonicalize(); // mpq equality needs canonical form
      Rat denom = Rat(1) + q * q;
      pts.emplace_back((Rat(1) - q * q) / denom, (Rat(2) * q) / denom);
    }
    size_t quadCount = pts.size();
    const Scalar iUnit{Rat(0), Rat(1)};
    Scalar mult = iUnit;
    for (int quad = 1; quad < 4; ++quad) {
      for (size_t k = 0; k < quadCount; ++k) pts.push_back(mult * pts[k]);
      mult = mult * iUnit;
    }

    // Certified angular gaps via exact cosines of consecutive pairs.
    Rat minCos(1);
    bool first = true;
    for (size_t k = 0; k < pts.size(); ++k) {
      const Scalar& a = pts[k];
      const Scalar& b = pts[(k + 1) % pts.size()];
      Rat c = (a.conj() * b).re;
      if (first || c < minCos) { minCos = c; first = false; }
    }

    // Require a secant bound strictly below sec(pi/n); that also forces the
    // largest gap strictly below 2*pi/n.
    if (pts.size() >= n && sgn(minCos) > 0) {
      RatInterval half = sqrtEnclosure((Rat(1) + minCos) / Rat(2), quarterWidth);
      if (sgn(half.lo) > 0 && half.lo > target.hi) {
        PhaseGrid g;
        g.points = std::move(pts);
        g.secBound = Rat(1) / half.lo;
        g.requested = n;
        return g;
      }
    }
  }
  fail("InternalInconsistency", "phase grid certification did not converge");
}

} // namespace choquet
