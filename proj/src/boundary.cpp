#include "choquet/boundary.hpp"

#include <algorithm>

#include "choquet/error.hpp"
#include "choquet/linprog.hpp"
#include "choquet/polytope.hpp"

namespace choquet {

std::optional<Scalar> unimodularRatio(const std::vector<Scalar>& target,
                                      const std::vector<Scalar>& base) {
  size_t j0 = SIZE_MAX;
  for (size_t j = 0; j < base.size(); ++j)
    if (!base[j].isZero()) { j0 = j; break; }
  if (j0 == SIZE_MAX) return std::nullopt;
  Scalar u = target[j0] / base[j0];
  if (u.normSq() != Rat(1)) return std::nullopt;
  for (size_t j = 0; j < base.size(); ++j)
    if (!(target[j] == u * base[j])) return std::nullopt;
  return u;
}

namespace {

std::vector<Scalar> scaledRow(const Scalar& u, const std::vector<Scalar>& row) {
  std::vector<Scalar> out(row.size());
  for (size_t j = 0; j < row.size(); ++j) out[j] = u * row[j];
  return out;
}

bool isZeroRow(const std::vector<Scalar>& row) {
  return std::all_of(row.begin(), row.end(), [](const Scalar& v) { return v.isZero(); });
}

// Index classes of points whose evaluations agree up to a unimodular scalar.
std::vector<std::vector<size_t>> indexClasses(const FunctionSpace& s) {
  std::vector<std::vector<size_t>> cls;
  for (size_t x = 0; x < s.n(); ++x) {
    bool placed = false;
    for (auto& c : cls) {
      if (!isZeroRow(s.row(c[0])) && unimodularRatio(s.row(x), s.row(c[0]))) {
        c.push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) cls.push_back({x});
  }
  return cls;
}

struct PeakResult {
  std::vector<Scalar> coeffs;
  Rat maxOther;   // certified bound for |h(y)| on the excluded points
};

// Real peak search: h(x) = 1, minimize max |h(y)| over y outside the class.
std::optional<PeakResult> realPeak(const FunctionSpace& s, size_t x,
                                   const std::vector<size_t>& outside) {
  size_t m = s.m();
  RVec rx = realVector(s.row(x));
  if (outside.empty()) {
    LinearProgram lp;
    lp.nvars = m;
    lp.newEqRow(Rat(1)) = rx;
    auto r = lpSolve(lp);
    if (r.status != LPResult::Status::Optimal) return std::nullopt;
    PeakResult pr;
    for (size_t j = 0; j < m; ++j) pr.coeffs.emplace_back(r.x[j]);
    pr.maxOther = Rat(0);
    return pr;
  }
  LinearProgram lp;
  lp.nvars = m + 1; // coefficients, then the bound t
  lp.objective.assign(m + 1, Rat(0));
  lp.objective[m] = Rat(1);
  auto& eq = lp.newEqRow(Rat(1));
  for (size_t j = 0; j < m; ++j) eq[j] = rx[j];
  for (size_t y : outside) {
    RVec ry = realVector(s.row(y));
    auto& up = lp.newLeRow(Rat(0));
    auto& dn = lp.newLeRow(Rat(0));
    for (size_t j = 0; j < m; ++j) { up[j] = ry[j]; dn[j] = -ry[j]; }
    up[m] = Rat(-1);
    dn[m] = Rat(-1);
  }
  auto r = lpSolve(lp);
  if (r.status != LPResult::Status::Optimal) return std::nullopt;
  if (r.value >= Rat(1)) return std::nullopt;
  PeakResult pr;
  for (size_t j = 0; j < m; ++j) pr.coeffs.emplace_back(r.x[j]);
  pr.maxOther = r.value;
  return pr;
}

// Complex peak search at a given grid size. The certified modulus bound is
// secBound * t, where t bounds the polygonal supports Re(conj(u) h(y)).
std::optional<PeakResult> complexPeak(const FunctionSpace& s, size_t x,
                                      const std::vector<size_t>& outside,
                                      size_t gridSize) {
  size_t m = s.m();
  auto buildCoeffs = [&](const RVec& sol) {
    std::vector<Scalar> c;
    for (size_t j = 0; j < m; ++j) c.emplace_back(sol[j], sol[m + j]);
    return c;
  };
  if (outside.empty()) {
    LinearProgram lp;
    lp.nvars = 2 * m;
    auto& re = lp.newEqRow(Rat(1));
    auto& im = lp.newEqRow(Rat(0));
    for (size_t j = 0; j < m; ++j) {
      const Scalar& e = s.row(x)[j];
      re[j] = e.re; re[m + j] = -e.im;
      im[j] = e.im; im[m + j] = e.re;
    }
    auto r = lpSolve(lp);
    if (r.status != LPResult::Status::Optimal) return std::nullopt;
    return PeakResult{buildCoeffs(r.x), Rat(0)};
  }
  PhaseGrid grid = buildPhaseGrid(gridSize);
  LinearProgram lp;
  lp.nvars = 2 * m + 1;
  lp.objective.assign(lp.nvars, Rat(0));
  lp.objective[2 * m] = Rat(1);
  auto& re = lp.newEqRow(Rat(1));
  auto& im = lp.newEqRow(Rat(0));
  for (size_t j = 0; j < m; ++j) {
    const Scalar& e = s.row(x)[j];
    re[j] = e.re; re[m + j] = -e.im;
    im[j] = e.im; im[m + j] = e.re;
  }
  for (size_t y : outside) {
    for (const Scalar& u : grid.points) {
      auto& row = lp.newLeRow(Rat(0));
      for (size_t j = 0; j < m; ++j) {
        Scalar c = u.conj() * s.row(y)[j];
        row[j] = c.re;
        row[m + j] = -c.im;
      }
      row[2 * m] = Rat(-1);
    }
  }
  auto r = lpSolve(lp);
  if (r.status != LPResult::Status::Optimal) return std::nullopt;
  Rat bound = r.value * grid.secBound;
  if (bound >= Rat(1)) return std::nullopt;
  return PeakResult{buildCoeffs(r.x), bound};
}

std::vector<size_t> peakGridSchedule(size_t target) {
  std::vector<size_t> sizes;
  if (target > 16)
    for (size_t g = 16; g < target; g *= 4) sizes.push_back(g);
  sizes.push_back(target);
  return sizes;
}

} // namespace

NormValue dualNorm(const FunctionSpace& s, const Functional& phi,
                   const AnalysisOptions& opt) {
  size_t m = s.m();
  if (phi.coeffs.size() != m)
    fail("DimensionMismatch", "functional has wrong coefficient count");
  if (std::all_of(phi.coeffs.begin(), phi.coeffs.end(),
                  [](const Scalar& v) { return v.isZero(); }))
    return NormValue::ofExact(Rat(0));

  if (s.field == Field::Real) {
    LinearProgram lp;
    lp.nvars = m;
    lp.objective = realVector(phi.coeffs);
    lp.maximize = true;
    for (size_t x = 0; x < s.n(); ++x) {
      RVec rx = realVector(s.row(x));
      auto& up = lp.newLeRow(Rat(1));
      auto& dn = lp.newLeRow(Rat(1));
      for (size_t j = 0; j < m; ++j) { up[j] = rx[j]; dn[j] = -rx[j]; }
    }
    auto r = lpSolve(lp);
    if (r.status != LPResult::Status::Optimal)
      fail("InternalInconsistency", "dual norm program must have an optimum");
    return NormValue::ofExact(r.value);
  }

  // Complex field: the ball is invariant under unimodular scaling, so the
  // norm equals max Re phi(h) over the ball; relax each modulus constraint to
  // the grid polygon for an upper value V, with V / secBound a lower one.
  // The chain always starts at 8 and doubles up to the configured cap, so
  // enclosures computed with a larger cap refine (are nested inside) those
  // from a smaller cap: the accumulated intersections share every prefix.
  // Running to the cap keeps the relative width below the cap's secant bound
  // regardless of the norm's magnitude.
  size_t cap = std::clamp<size_t>(opt.phaseGridN, 8, 1024);
  size_t g = 8;
  RatInterval acc{Rat(0), Rat(0)};
  bool first = true;
  for (;;) {
    PhaseGrid grid = buildPhaseGrid(g);
    LinearProgram lp;
    lp.nvars = 2 * m;
    lp.objective.assign(lp.nvars, Rat(0));
    for (size_t j = 0; j < m; ++j) {
      lp.objective[j] = phi.coeffs[j].re;
      lp.objective[m + j] = -phi.coeffs[j].im;
    }
    lp.maximize = true;
    for (size_t x = 0; x < s.n(); ++x) {
      for (const Scalar& u : grid.points) {
        auto& row = lp.newLeRow(Rat(1));
        for (size_t j = 0; j < m; ++j) {
          Scalar c = u.conj() * s.row(x)[j];
          row[j] = c.re;
          row[m + j] = -c.im;
        }
      }
    }
    auto r = lpSolve(lp);
    if (r.status != LPResult::Status::Optimal)
      fail("InternalInconsistency", "dual norm program must have an optimum");
    RatInterval cur{r.value / grid.secBound, r.value};
    if (first) {
      acc = cur;
      first = false;
    } else {
      acc.lo = std::max(acc.lo, cur.lo);
      acc.hi = std::min(acc.hi, cur.hi);
      if (acc.lo > acc.hi)
        fail("InternalInconsistency", "nested norm enclosures do not intersect");
    }
    if (g >= cap) break;
    g = std::min<size_t>(g * 2, cap);
  }
  return {std::nullopt, acc};
}

BoundaryAnalysis choquetBoundary(const FunctionSpace& s, const AnalysisOptions& opt) {
  BoundaryAnalysis out;
  size_t n = s.n();

  if (s.field == Field::Real) {
    RMat gens;
    auto pushUnique = [&](RVec v) {
      if (std::find(gens.begin(), gens.end(), v) == gens.end())
        gens.push_back(std::move(v));
    };
    for (size_t y = 0; y < n; ++y) {
      RVec r = realVector(s.row(y));
      RVec neg(r.size());
      for (size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
      pushUnique(std::move(r));
      pushUnique(std::move(neg));
    }
    for (size_t x = 0; x < n; ++x) {
      const std::string& label = s.K.labels[x];
      if (isZeroRow(s.row(x))) {
        out.classification[label] = Verdict::no("zero-evaluation");
        continue;
      }
      RVec v = realVector(s.row(x));
      RMat others;
      bool skipped = false;
      for (const RVec& g : gens) {
        if (!skipped && g == v) { skipped = true; continue; }
        others.push_back(g);
      }
      bool member = inConvexHull(v, others);
      out.classification[label] = member ? Verdict::no("exact-hull")
                                         : Verdict::yes("exact-hull");
    }
  } else {
    PhaseGrid grid = buildPhaseGrid(opt.phaseGridN);
    for (const auto& cls : indexClasses(s)) {
      size_t x0 = cls[0];
      Verdict v;
      if (isZeroRow(s.row(x0))) {
        v = Verdict::no("zero-evaluation");
      } else {
        RVec target = realifyVector(s.row(x0));
        RMat gens;
        for (size_t y = 0; y < n; ++y) {
          for (const Scalar& u : grid.points) {
            std::vector<Scalar> w = scaledRow(u, s.row(y));
            if (w == s.row(x0)) continue;
            gens.push_back(realifyVector(w));
          }
        }
        if (inConvexHull(target, gens)) {
          v = Verdict::no("grid-hull", {{"gridSize", grid.size()}});
        } else {
          std::vector<size_t> outside;
          for (size_t y = 0; y < n; ++y)
            if (std::find(cls.begin(), cls.end(), y) == cls.end())
              outside.push_back(y);
          bool found = false;
          for (size_t gsz : peakGridSchedule(opt.phaseGridN)) {
            if (auto pk = complexPeak(s, x0, outside, gsz)) {
              json w;
              w["peak"] = json::array();
              for (const Scalar& c : pk->coeffs) w["peak"].push_back(scalarToString(c));
              w["othersBelow"] = ratToString(pk->maxOther);
              v = Verdict::yes("peak-function", w);
              found = true;
              break;
            }
          }
          if (!found) v = Verdict::unknown("grid-inconclusive",
                                           {{"gridSize", grid.size()}});
        }
      }
      for (size_t x : cls) out.classification[s.K.labels[x]] = v;
    }
  }

  for (const std::string& label : s.K.labels) {
    const Verdict& v = out.classification.at(label);
    if (v.isTrue()) out.members.push_back(label);
    if (!v.decided()) out.complete = false;
  }
  return out;
}

std::vector<std::vector<std::string>> phaseClasses(const FunctionSpace& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : indexClasses(s)) {
    std::vector<std::string> labels;
    for (size_t x : cls) labels.push_back(s.K.labels[x]);
    out.push_back(std::move(labels));
  }
  return out;
}

Verdict unitActionInjective(const FunctionSpace& s, const AnalysisOptions& opt) {
  return unitActionInjective(s, choquetBoundary(s, opt));
}

Verdict unitActionInjective(const FunctionSpace& s, const BoundaryAnalysis& b) {
  bool potential = false;
  for (size_t x = 0; x < s.n(); ++x) {
    if (isZeroRow(s.row(x))) continue;
    for (size_t y = x + 1; y < s.n(); ++y) {
      auto u = unimodularRatio(s.row(y), s.row(x));
      if (!u) continue;
      const Verdict& vx = b.classification.at(s.K.labels[x]);
      const Verdict& vy = b.classification.at(s.K.labels[y]);
      if (vx.isTrue() && vy.isTrue()) {
        json w{{"pointA", s.K.labels[x]},
               {"pointB", s.K.labels[y]},
               {"ratio", scalarToString(*u)}};
        return Verdict::no("phase-class-scan", w);
      }
      if (!vx.isFalse() && !vy.isFalse()) potential = true;
    }
  }
  if (potential) return Verdict::unknown("phase-class-scan");
  return Verdict::yes("phase-class-scan");
}

std::optional<std::vector<Scalar>> peakFunction(const FunctionSpace& s,
                                                const std::string& label,
                                                const AnalysisOptions& opt) {
  size_t x = s.K.index(label);
  if (isZeroRow(s.row(x))) return std::nullopt;
  std::vector<size_t> outside;
  for (size_t y = 0; y < s.n(); ++y)
    if (y != x && !unimodularRatio(s.row(y), s.row(x))) outside.push_back(y);

  if (s.field == Field::Real) {
    if (auto pk = realPeak(s, x, outside)) return pk->coeffs;
    return std::nullopt;
  }
  for (size_t gsz : peakGridSchedule(opt.phaseGridN))
    if (auto pk = complexPeak(s, x, outside, gsz)) return pk->coeffs;
  return std::nullopt;
}

std::optional<std::vector<Scalar>> pairPeakFunction(const FunctionSpace& s,
                                                    const std::string& labelA,
                                                    const std::string& labelB,
                                                    const Rat& margin,
                                                    const AnalysisOptions& opt) {
  if (sgn(margin) <= 0 || margin >= Rat(1))
    fail("BadParam", "margin must lie strictly between 0 and 1");
  size_t a = s.K.index(labelA);
  size_t b = s.K.index(labelB);
  std::vector<size_t> outside;
  for (size_t y = 0; y < s.n(); ++y)
    if (y != a && y != b) outside.push_back(y);
  if (outside.empty())
    fail("BadParam", "the space has no points outside the chosen pair");
  Rat cap = Rat(1) - margin;
  size_t m = s.m();

  if (s.field == Field::Real) {
    RVec ra = realVector(s.row(a)), rb = realVector(s.row(b));
    std::vector<int> bSigns = (a == b) ? std::vector<int>{1} : std::vector<int>{1, -1};
    for (int bSign : bSigns) {
      LinearProgram lp;
      lp.nvars = m + 1; // coefficients, then the bound t
      lp.objective.assign(m + 1, Rat(0));
      lp.objective[m] = Rat(1);
      auto& eqA = lp.newEqRow(Rat(1));
      for (size_t j = 0; j < m; ++j) eqA[j] = ra[j];
      if (a != b) {
        auto& eqB = lp.newEqRow(Rat(bSign));
        for (size_t j = 0; j < m; ++j) eqB[j] = rb[j];
      }
      for (size_t y : outside) {
        RVec ry = realVector(s.row(y));
        auto& up = lp.newLeRow(Rat(0));
        auto& dn = lp.newLeRow(Rat(0));
        for (size_t j = 0; j < m; ++j) { up[j] = ry[j]; dn[j] = -ry[j]; }
        up[m] = Rat(-1);
        dn[m] = Rat(-1);
      }
      auto r = lpSolve(lp);
      if (r.status == LPResult::Status::Optimal && r.value <= cap) {
        std::vector<Scalar> c;
        for (size_t j = 0; j < m; ++j) c.emplace_back(r.x[j]);
        return c;
      }
    }
    return std::nullopt;
  }

  // Complex: fix the value at b to each phase of a coarse grid in turn; the
  // bound on the remaining points is certified through the usual secant factor.
  std::vector<Scalar> bValues =
      (a == b) ? std::vector<Scalar>{Scalar(1)} : buildPhaseGrid(8).points;
  for (size_t gsz : peakGridSchedule(opt.phaseGridN)) {
    PhaseGrid grid = buildPhaseGrid(gsz);
    for (const Scalar& u : bValues) {
      LinearProgram lp;
      lp.nvars = 2 * m + 1;
      lp.objective.assign(lp.nvars, Rat(0));
      lp.objective[2 * m] = Rat(1);
      auto addValueRows = [&](size_t pt, const Scalar& val) {
        auto& re = lp.newEqRow(val.re);
        auto& im = lp.newEqRow(val.im);
        for (size_t j = 0; j < m; ++j) {
          const Scalar& e = s.row(pt)[j];
          re[j] = e.re; re[m + j] = -e.im;
          im[j] = e.im; im[m + j] = e.re;
        }
      };
      addValueRows(a, Scalar(1));
      if (a != b) addValueRows(b, u);
      for (size_t y : outside) {
        for (const Scalar& v : grid.points) {
          auto& row = lp.newLeRow(Rat(0));
          for (size_t j = 0; j < m; ++j) {
            Scalar cc = v.conj() * s.row(y)[j];
            row[j] = cc.re;
            row[m + j] = -cc.im;
          }
          row[2 * m] = Rat(-1);
        }
      }
      auto r = lpSolve(lp);
      if (r.status == LPResult::Status::Optimal && r.value * grid.secBound <= cap) {
        std::vector<Scalar> c;
        for (size_t j = 0; j < m; ++j) c.emplace_back(r.x[j], r.x[m + j]);
        return c;
      }
    }
  }
  return std::nullopt;
}

StateSpaceInfo stateSpace(const FunctionSpace& s, const AnalysisOptions& opt) {
  if (!s.containsConstants)
    fail("NoConstants", "state space requires the constants in the space");
  auto b = choquetBoundary(s, opt);
  if (!b.complete)
    fail("UndecidedBoundary", "boundary classification left some points unknown");
  if (b.members.empty())
    fail("InternalInconsistency", "the dual ball must have extreme points");

  StateSpaceInfo info;
  info.vertexLabels = b.members;
  for (const std::string& label : b.members) {
    const auto& row = s.row(s.K.index(label));
    info.vertices.push_back(s.field == Field::Real ? realVector(row)
                                                   : realifyVector(row));
  }
  info.affineDim = affineDimension(info.vertices);
  info.simplex = info.vertices.size() == info.affineDim + 1;
  return info;
}

} // namespace choquet
