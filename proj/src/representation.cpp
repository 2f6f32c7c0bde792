#include "choquet/representation.hpp"

#include <algorithm>

#include "choquet/error.hpp"
#include "choquet/io.hpp"
#include "choquet/linalg.hpp"
#include "choquet/linprog.hpp"
#include "choquet/polytope.hpp"

namespace choquet {

namespace {

const auto ratZero = [](const Rat& x) { return sgn(x) == 0; };
const auto scalarZero = [](const Scalar& x) { return x.isZero(); };

void requireReal(const FunctionSpace& s, const char* what) {
  if (s.field != Field::Real)
    fail("ComplexUnsupported", std::string(what) + " is only implemented over the real field");
}

Rat dot(const RVec& a, const RVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<size_t> decidedBoundaryIndices(const FunctionSpace& s, const BoundaryAnalysis& b) {
  std::vector<size_t> idx;
  for (const std::string& label : b.members) idx.push_back(s.K.index(label));
  return idx;
}

// Equality system of the lifted norm-preserving representation polytope over
// the chosen support: variables p then q (both over pts, nonnegative),
// sum (p-q) row = phi and sum (p+q) = norm.
void liftedSystem(const FunctionSpace& s, const RVec& phi, const Rat& norm,
                  const std::vector<size_t>& pts, RMat& A, RVec& b) {
  size_t m = s.m(), k = pts.size();
  A.assign(m + 1, RVec(2 * k, Rat(0)));
  b.assign(m + 1, Rat(0));
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < k; ++i) {
      Rat e = s.row(pts[i])[j].re;
      A[j][i] = e;
      A[j][k + i] = -e;
    }
    b[j] = phi[j];
  }
  for (size_t i = 0; i < 2 * k; ++i) A[m][i] = Rat(1);
  b[m] = norm;
}

Measure measureFromLifted(const FunctionSpace& s, const std::vector<size_t>& pts,
                          const RVec& z) {
  Measure mu;
  size_t k = pts.size();
  for (size_t i = 0; i < k; ++i)
    mu.set(s.K.labels[pts[i]], Scalar(z[i] - z[k + i]));
  return mu;
}

Rat exactNorm(const FunctionSpace& s, const Functional& phi, const AnalysisOptions& opt) {
  NormValue nv = dualNorm(s, phi, opt);
  if (!nv.isExact()) fail("InternalInconsistency", "real dual norm must be exact");
  return *nv.exact;
}

// Any feasible point of {z >= 0 : Az = b}, plus a second distinct point if
// one exists (coordinate-wise extremes witness non-uniqueness).
struct Probe {
  bool feasible = false;
  RVec first;
  std::optional<RVec> second;
};

Probe probeUniqueness(const RMat& A, const RVec& b) {
  Probe out;
  size_t cols = A.empty() ? 0 : A[0].size();
  LinearProgram base;
  base.nvars = cols;
  base.nonneg.assign(cols, true);
  base.eqA.assign(A.begin(), A.end());
  base.eqB = b;
  auto r0 = lpSolve(base);
  if (r0.status != LPResult::Status::Optimal) return out;
  out.feasible = true;
  out.first = r0.x;
  for (size_t j = 0; j < cols; ++j) {
    for (bool maximize : {true, false}) {
      LinearProgram lp = base;
      lp.objective.assign(cols, Rat(0));
      lp.objective[j] = Rat(1);
      lp.maximize = maximize;
      auto r = lpSolve(lp);
      if (r.status != LPResult::Status::Optimal)
        fail("InternalInconsistency", "representation polytope must be bounded");
      if (r.value != out.first[j]) {
        out.second = r.x;
        return out;
      }
    }
  }
  return out;
}

std::vector<Measure> measureVertices(const FunctionSpace& s, const Functional& phi,
                                     const std::vector<size_t>& pts,
                                     const AnalysisOptions& opt) {
  RVec target = realVector(phi.coeffs);
  Rat norm = exactNorm(s, phi, opt);
  RMat A;
  RVec b;
  liftedSystem(s, target, norm, pts, A, b);
  RMat verts = standardFormVertices(A, b, opt.rayBudget);
  std::vector<Measure> out;
  out.reserve(verts.size());
  for (const RVec& z : verts) out.push_back(measureFromLifted(s, pts, z));
  return out;
}

// ---------------------------------------------------------------------------
// Shared analysis context

struct Ctx {
  const FunctionSpace& s;
  const AnalysisOptions& opt;
  BoundaryAnalysis bnd;
  std::vector<size_t> bidx;

  bool facetsTried = false;
  bool facetsOk = false;
  RMat gens; // dedup +- boundary rows = the dual ball's vertex set
  std::vector<Facet> facets;
};

Ctx makeCtx(const FunctionSpace& s, const AnalysisOptions& opt) {
  Ctx ctx{s, opt, choquetBoundary(s, opt), {}};
  ctx.bidx = decidedBoundaryIndices(s, ctx.bnd);
  return ctx;
}

void ensureFacets(Ctx& ctx) {
  if (ctx.facetsTried) return;
  ctx.facetsTried = true;
  for (size_t i : ctx.bidx) {
    RVec r = realVector(ctx.s.row(i));
    RVec neg(r.size());
    for (size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
    if (std::find(ctx.gens.begin(), ctx.gens.end(), r) == ctx.gens.end())
      ctx.gens.push_back(std::move(r));
    if (std::find(ctx.gens.begin(), ctx.gens.end(), neg) == ctx.gens.end())
      ctx.gens.push_back(std::move(neg));
  }
  try {
    ctx.facets = facetEnumeration(ctx.gens, ctx.s.m(), ctx.opt.rayBudget);
    ctx.facetsOk = true;
  } catch (const Error& e) {
    if (e.code() != "RayBudgetExceeded") throw;
    ctx.facetsOk = false;
  }
}

json measureWitness(const Measure& mu) { return measureToJson(mu); }

// Deterministic scale for annihilator directions: total variation 1, first
// nonzero entry positive.
void canonicalizeDirection(RVec& v) {
  Rat tv(0);
  int lead = 0;
  for (const Rat& x : v) {
    if (lead == 0) lead = sgn(x);
    tv += ratAbs(x);
  }
  if (sgn(tv) == 0) fail("InternalInconsistency", "zero annihilator direction");
  if (lead < 0) tv = -tv;
  for (Rat& x : v) x /= tv;
}

json coeffsWitness(const RVec& c) {
  json arr = json::array();
  for (const Rat& v : c) arr.push_back(ratToString(v));
  return arr;
}

// ---------------------------------------------------------------------------
// Condition II: unique boundary representation for every point evaluation

Verdict simplicialPrimitive(Ctx& ctx) {
  const FunctionSpace& s = ctx.s;
  json table = json::object();
  json firstWitness;
  bool failed = false;
  for (size_t x = 0; x < s.n(); ++x) {
    Functional phi = evaluationFunctional(s, x);
    Rat norm = exactNorm(s, phi, ctx.opt);
    RMat A;
    RVec b;
    liftedSystem(s, realVector(phi.coeffs), norm, ctx.bidx, A, b);
    Probe pr = probeUniqueness(A, b);
    if (!pr.feasible)
      fail("InternalInconsistency", "every evaluation has a boundary representation");
    table[s.K.labels[x]] = pr.second ? "multiple" : "unique";
    if (pr.second && !failed) {
      failed = true;
      firstWitness = json{
          {"point", s.K.labels[x]},
          {"first", measureWitness(measureFromLifted(s, ctx.bidx, pr.first))},
          {"second", measureWitness(measureFromLifted(s, ctx.bidx, *pr.second))}};
    }
  }
  if (failed) {
    firstWitness["perPoint"] = table;
    return Verdict::no("per-point-uniqueness", firstWitness);
  }
  return Verdict::yes("per-point-uniqueness", {{"perPoint", table}});
}

// ---------------------------------------------------------------------------
// Condition III: unique boundary representation for every functional

json nonUniquenessWitness(const FunctionSpace& s, const Measure& mu, const Measure& nu,
                          const RVec& f) {
  Functional phi = functionalOf(s, mu);
  json w;
  w["mu"] = measureWitness(mu);
  w["nu"] = measureWitness(nu);
  w["normingFunction"] = coeffsWitness(f);
  json phiArr = json::array();
  for (const Scalar& c : phi.coeffs) phiArr.push_back(scalarToString(c));
  w["functional"] = phiArr;
  return w;
}

// Exhaustive sign-pattern search in the one-dimensional annihilator case.
// For each support point the pair (sgn mu, sgn(mu+nu)) must avoid opposite
// strict signs, which leaves four cases tied to a forced value of the norming
// function; the loop minimizes ||mu|| + ||mu+nu|| over all feasible cases.
Verdict signPatternRoute(Ctx& ctx, const RVec& nuOnBoundary) {
  const FunctionSpace& s = ctx.s;
  size_t m = s.m(), n = s.n();
  std::vector<size_t> supp; // indices into ctx.bidx
  for (size_t i = 0; i < nuOnBoundary.size(); ++i)
    if (sgn(nuOnBoundary[i]) != 0) supp.push_back(i);
  size_t k = supp.size();

  Measure nuMeasure;
  for (size_t i = 0; i < nuOnBoundary.size(); ++i)
    nuMeasure.set(s.K.labels[ctx.bidx[i]], Scalar(nuOnBoundary[i]));

  bool found = false;
  Rat bestVal;
  Measure bestMu;
  RVec bestF;

  size_t cases = 1;
  for (size_t t = 0; t < k; ++t) cases *= 4;
  for (size_t mask = 0; mask < cases; ++mask) {
    LinearProgram lp;
    lp.nvars = k + m; // mu over the support, then the norming coefficients
    lp.objective.assign(lp.nvars, Rat(0));
    Rat constant(0);
    size_t rest = mask;
    std::vector<int> fval(k, 0);
    std::vector<int> pat(k, 0);
    for (size_t t = 0; t < k; ++t) {
      pat[t] = int(rest % 4);
      rest /= 4;
    }
    for (size_t t = 0; t < k; ++t) {
      size_t point = ctx.bidx[supp[t]];
      Rat nux = nuOnBoundary[supp[t]];
      int snu = sgn(nux);
      switch (pat[t]) {
        case 0: { // mu > 0 and mu + nu > 0 (weakly), function value +1
          auto& r1 = lp.newLeRow(Rat(0));
          r1[t] = Rat(-1);
          auto& r2 = lp.newLeRow(nux);
          r2[t] = Rat(-1);
          lp.objective[t] = Rat(2);
          constant += nux;
          fval[t] = 1;
          break;
        }
        case 1: { // mu and mu + nu both <= 0, function value -1
          auto& r1 = lp.newLeRow(Rat(0));
          r1[t] = Rat(1);
          auto& r2 = lp.newLeRow(Rat(-nux));
          r2[t] = Rat(1);
          lp.objective[t] = Rat(-2);
          constant -= nux;
          fval[t] = -1;
          break;
        }
        case 2: { // mu = 0, the mass sits on mu + nu = nu
          auto& r = lp.newEqRow(Rat(0));
          r[t] = Rat(1);
          constant += ratAbs(nux);
          fval[t] = snu;
          break;
        }
        case 3: { // mu + nu = 0, the mass sits on mu = -nu
          auto& r = lp.newEqRow(Rat(-nux));
          r[t] = Rat(1);
          constant += ratAbs(nux);
          fval[t] = -snu;
          break;
        }
      }
      auto& fr = lp.newEqRow(Rat(fval[t]));
      for (size_t j = 0; j < m; ++j) fr[k + j] = s.row(point)[j].re;
    }
    for (size_t y = 0; y < n; ++y) {
      auto& up = lp.newLeRow(Rat(1));
      auto& dn = lp.newLeRow(Rat(1));
      for (size_t j = 0; j < m; ++j) {
        Rat e = s.row(y)[j].re;
        up[k + j] = e;
        dn[k + j] = -e;
      }
    }
    auto r = lpSolve(lp);
    if (r.status != LPResult::Status::Optimal) continue;
    Rat val = r.value + constant;
    if (!found || val < bestVal) {
      found = true;
      bestVal = val;
      bestMu = Measure{};
      for (size_t t = 0; t < k; ++t)
        bestMu.set(s.K.labels[ctx.bidx[supp[t]]], Scalar(r.x[t]));
      bestF.assign(r.x.begin() + k, r.x.begin() + k + m);
    }
  }

  if (!found) return Verdict::yes("sign-pattern-search");
  json w = nonUniquenessWitness(s, bestMu, nuMeasure, bestF);
  w["pairTotalVariation"] = ratToString(bestVal);
  return Verdict::no("sign-pattern-search", w);
}

// Facet route, any annihilator dimension: uniqueness fails exactly when the
// boundary rows pinned to +-1 by some facet normal are linearly dependent.
Verdict facetRoute(Ctx& ctx) {
  const FunctionSpace& s = ctx.s;
  size_t m = s.m();
  ensureFacets(ctx);
  if (!ctx.facetsOk)
    return Verdict::unknown("facet-scan", {{"reason", "ray budget exceeded"}});
  for (const Facet& fc : ctx.facets) {
    if (sgn(fc.offset) <= 0)
      fail("InternalInconsistency", "dual ball facets must have positive offset");
    RVec c(m);
    for (size_t j = 0; j < m; ++j) c[j] = fc.normal[j] / fc.offset;
    std::vector<size_t> S;
    std::vector<int> sign;
    for (size_t i : ctx.bidx) {
      Rat d = dot(realVector(s.row(i)), c);
      if (ratAbs(d) == Rat(1)) {
        S.push_back(i);
        sign.push_back(sgn(d));
      }
    }
    if (S.size() <= 1) continue;
    RMat eq(m, RVec(S.size()));
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < S.size(); ++t) eq[j][t] = s.row(S[t])[j].re;
    RMat ns = nullspaceBasis(eq, S.size(), ratZero);
    if (ns.empty()) continue;
    RVec nu = ns[0];
    canonicalizeDirection(nu);
    Measure nuMeasure, mu;
    for (size_t t = 0; t < S.size(); ++t) {
      if (sgn(nu[t]) != 0) nuMeasure.set(s.K.labels[S[t]], Scalar(nu[t]));
      Rat muv = sign[t] > 0 ? std::max(Rat(-nu[t]), Rat(0)) : Rat(-std::max(nu[t], Rat(0)));
      if (sgn(muv) != 0) mu.set(s.K.labels[S[t]], Scalar(muv));
    }
    json w = nonUniquenessWitness(s, mu, nuMeasure, c);
    w["facetNormal"] = coeffsWitness(c);
    return Verdict::no("facet-scan", w);
  }
  return Verdict::yes("facet-scan");
}

Verdict functionallySimplicialPrimitive(Ctx& ctx) {
  const FunctionSpace& s = ctx.s;
  size_t m = s.m(), k = ctx.bidx.size();
  RMat eq(m, RVec(k));
  for (size_t j = 0; j < m; ++j)
    for (size_t t = 0; t < k; ++t) eq[j][t] = s.row(ctx.bidx[t])[j].re;
  RMat ns = nullspaceBasis(eq, k, ratZero);
  if (ns.empty()) return Verdict::yes("trivial-boundary-annihilators");
  if (ns.size() == 1) {
    RVec nu = ns[0];
    canonicalizeDirection(nu);
    size_t suppSize = 0;
    for (const Rat& v : nu)
      if (sgn(v) != 0) ++suppSize;
    size_t cases = 1;
    bool fits = true;
    for (size_t t = 0; t < suppSize; ++t) {
      if (cases > ctx.opt.signPatternBudget / 4) { fits = false; break; }
      cases *= 4;
    }
    if (fits && ctx.opt.signPatternBudget > 0) return signPatternRoute(ctx, nu);
  }
  return facetRoute(ctx);
}

// ---------------------------------------------------------------------------
// Condition IV: only the zero annihilating measure lives on the boundary

Verdict trivialAnnihilatorsPrimitive(Ctx& ctx) {
  const FunctionSpace& s = ctx.s;
  size_t m = s.m();
  auto rowsOf = [&](bool includeUnknown) {
    std::vector<size_t> idx;
    for (size_t x = 0; x < s.n(); ++x) {
      const Verdict& v = ctx.bnd.classification.at(s.K.labels[x]);
      if (v.isTrue() || (includeUnknown && !v.decided())) idx.push_back(x);
    }
    return idx;
  };
  auto dependency = [&](const std::vector<size_t>& idx) -> std::optional<Measure> {
    if (idx.empty()) return std::nullopt;
    std::vector<std::vector<Scalar>> eq(m, std::vector<Scalar>(idx.size()));
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < idx.size(); ++t) eq[j][t] = s.row(idx[t])[j];
    auto ns = nullspaceBasis(eq, idx.size(), scalarZero);
    if (ns.empty()) return std::nullopt;
    std::vector<Scalar> v = ns[0];
    for (const Scalar& c : v)
      if (!c.isZero()) { // canonical scale: first nonzero entry becomes 1
        Scalar lead = c;
        for (Scalar& e : v) e = e / lead;
        break;
      }
    Measure nu;
    for (size_t t = 0; t < idx.size(); ++t)
      if (!v[t].isZero()) nu.set(s.K.labels[idx[t]], v[t]);
    return nu;
  };

  std::vector<size_t> sure = rowsOf(false);
  if (auto nu = dependency(sure)) {
    json w{{"annihilator", measureWitness(*nu)}};
    return Verdict::no("boundary-rank", w);
  }
  if (ctx.bnd.complete) return Verdict::yes("boundary-rank");
  if (!dependency(rowsOf(true))) return Verdict::yes("boundary-rank");
  return Verdict::unknown("boundary-rank", {{"reason", "undecided boundary points"}});
}

// ---------------------------------------------------------------------------
// Condition V: every facet of the dual ball is a simplex

Verdict simplexoidPrimitive(Ctx& ctx) {
  size_t m = ctx.s.m();
  ensureFacets(ctx);
  if (!ctx.facetsOk)
    return Verdict::unknown("facet-scan", {{"reason", "ray budget exceeded"}});
  for (const Facet& fc : ctx.facets) {
    if (fc.incident.size() != m) {
      json w{{"facetNormal", coeffsWitness(fc.normal)},
             {"offset", ratToString(fc.offset)},
             {"vertexCount", fc.incident.size()},
             {"simplexCount", m}};
      return Verdict::no("facet-scan", w);
    }
  }
  return Verdict::yes("facet-scan", {{"facets", ctx.facets.size()}});
}

// ---------------------------------------------------------------------------
// Condition VI: dual ball = absolute hull of exactly m independent directions

Verdict crossPolytopePrimitive(Ctx& ctx) {
  const FunctionSpace& s = ctx.s;
  size_t m = s.m();
  size_t lo = 0, hi = 0;
  std::vector<size_t> reps; // one representative per phase class
  for (size_t x = 0; x < s.n(); ++x) {
    bool isRep = true;
    for (size_t y = 0; y < x; ++y)
      if (unimodularRatio(s.row(x), s.row(y))) { isRep = false; break; }
    if (isRep) reps.push_back(x);
  }
  for (size_t x : reps) {
    const Verdict& v = ctx.bnd.classification.at(s.K.labels[x]);
    if (v.isTrue()) { ++lo; ++hi; }
    else if (!v.decided()) ++hi;
  }
  json w{{"boundaryClassesLow", lo}, {"boundaryClassesHigh", hi}, {"dimension", m}};
  if (lo == hi) return lo == m ? Verdict::yes("class-count", w) : Verdict::no("class-count", w);
  if (lo > m || hi < m) return Verdict::no("class-count", w);
  return Verdict::unknown("class-count", w);
}

// ---------------------------------------------------------------------------
// Implication closure over the condition lattice

void applyEdge(std::map<std::string, Verdict>& c, const std::string& a,
               const std::string& b, bool& changed) {
  Verdict& va = c[a];
  Verdict& vb = c[b];
  if (va.isTrue() && vb.isFalse())
    fail("InternalInconsistency",
         "computed verdicts violate the implication " + a + " => " + b);
  if (va.isTrue() && !vb.decided()) {
    vb = Verdict::yes("implied(" + a + ")");
    changed = true;
  }
  if (vb.isFalse() && !va.decided()) {
    va = Verdict::no("implied(not " + b + ")");
    changed = true;
  }
}

void closeUnderImplications(std::map<std::string, Verdict>& c) {
  const std::vector<std::pair<const char*, const char*>> edges = {
      {kCondFunctionallySimplicial, kCondSimplicial},
      {kCondSimplicial, kCondInjective},
      {kCondTrivialAnnihilators, kCondFunctionallySimplicial},
      {kCondTrivialAnnihilators, kCondCrossPolytope},
      {kCondCrossPolytope, kCondSimplexoid},
      {kCondFunctionallySimplicial, kCondSimplexoid},
  };
  // These reversals hold when the unit action is injective.
  const std::vector<std::pair<const char*, const char*>> conditional = {
      {kCondSimplexoid, kCondFunctionallySimplicial},
      {kCondCrossPolytope, kCondTrivialAnnihilators},
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : edges) applyEdge(c, a, b, changed);
    if (c[kCondInjective].isTrue())
      for (const auto& [a, b] : conditional) applyEdge(c, a, b, changed);
  }
}

} // namespace

// ---------------------------------------------------------------------------
// Public API

std::vector<Measure> representingVertices(const FunctionSpace& s, const Functional& phi,
                                          const AnalysisOptions& opt) {
  requireReal(s, "representing measure enumeration");
  std::vector<size_t> pts(s.n());
  for (size_t i = 0; i < s.n(); ++i) pts[i] = i;
  return measureVertices(s, phi, pts, opt);
}

std::vector<Measure> boundaryRepresentingVertices(const FunctionSpace& s,
                                                  const Functional& phi,
                                                  const AnalysisOptions& opt) {
  requireReal(s, "representing measure enumeration");
  auto b = choquetBoundary(s, opt);
  return measureVertices(s, phi, decidedBoundaryIndices(s, b), opt);
}

std::vector<Measure> boundaryAnnihilatorBasis(const FunctionSpace& s,
                                              const AnalysisOptions& opt) {
  auto b = choquetBoundary(s, opt);
  if (!b.complete)
    fail("UndecidedBoundary", "annihilator basis needs a fully decided boundary");
  std::vector<size_t> idx = decidedBoundaryIndices(s, b);
  size_t m = s.m();
  std::vector<std::vector<Scalar>> eq(m, std::vector<Scalar>(idx.size()));
  for (size_t j = 0; j < m; ++j)
    for (size_t t = 0; t < idx.size(); ++t) eq[j][t] = s.row(idx[t])[j];
  auto ns = nullspaceBasis(eq, idx.size(), scalarZero);
  std::vector<Measure> out;
  for (const auto& vec : ns) {
    Measure nu;
    for (size_t t = 0; t < idx.size(); ++t)
      if (!vec[t].isZero()) nu.set(s.K.labels[idx[t]], vec[t]);
    out.push_back(std::move(nu));
  }
  return out;
}

RepresentationProbe representationUniqueness(const FunctionSpace& s, const Functional& phi,
                                             bool boundaryOnly,
                                             const AnalysisOptions& opt) {
  requireReal(s, "representation uniqueness probe");
  std::vector<size_t> pts;
  if (boundaryOnly) {
    auto b = choquetBoundary(s, opt);
    if (!b.complete)
      fail("UndecidedBoundary", "uniqueness probe needs a fully decided boundary");
    pts = decidedBoundaryIndices(s, b);
  } else {
    pts.resize(s.n());
    for (size_t i = 0; i < s.n(); ++i) pts[i] = i;
  }
  Rat norm = exactNorm(s, phi, opt);
  RMat A;
  RVec rhs;
  liftedSystem(s, realVector(phi.coeffs), norm, pts, A, rhs);
  Probe pr = probeUniqueness(A, rhs);
  if (!pr.feasible)
    fail("InternalInconsistency", "norm-preserving representations always exist");
  RepresentationProbe out{measureFromLifted(s, pts, pr.first), std::nullopt};
  if (pr.second) out.second = measureFromLifted(s, pts, *pr.second);
  return out;
}

std::optional<Measure> uniqueBoundaryRepresentation(const FunctionSpace& s,
                                                    const std::string& label,
                                                    const AnalysisOptions& opt) {
  Functional phi = evaluationFunctional(s, s.K.index(label));
  RepresentationProbe pr = representationUniqueness(s, phi, true, opt);
  if (pr.second) return std::nullopt;
  return pr.first;
}

Verdict isSimplicial(const FunctionSpace& s, const AnalysisOptions& opt) {
  return conditionReport(s, opt).conditions.at(kCondSimplicial);
}

Verdict isFunctionallySimplicial(const FunctionSpace& s, const AnalysisOptions& opt) {
  return conditionReport(s, opt).conditions.at(kCondFunctionallySimplicial);
}

Verdict hasOnlyTrivialBoundaryAnnihilators(const FunctionSpace& s,
                                           const AnalysisOptions& opt) {
  return conditionReport(s, opt).conditions.at(kCondTrivialAnnihilators);
}

Verdict isSimplexoid(const FunctionSpace& s, const AnalysisOptions& opt) {
  return conditionReport(s, opt).conditions.at(kCondSimplexoid);
}

Verdict isL1Predual(const FunctionSpace& s, const AnalysisOptions& opt) {
  return conditionReport(s, opt).conditions.at(kCondCrossPolytope);
}

bool verifyNonUniquenessWitness(const FunctionSpace& s, const json& witness,
                                const AnalysisOptions& opt) {
  try {
    if (s.field != Field::Real) return false;
    Measure nu = measureFromJson(witness.at("nu"));
    if (nu.isZero()) return false;
    Measure mu = measureFromJson(witness.at("mu"));
    if (!functionalOf(s, nu).isZero()) return false;

    std::vector<Scalar> f;
    for (const auto& v : witness.at("normingFunction"))
      f.emplace_back(ratFromString(v.get<std::string>()));
    if (f.size() != s.m()) return false;
    for (size_t y = 0; y < s.n(); ++y) {
      Scalar v = s.eval(f, y);
      if (sgn(v.im) != 0 || ratAbs(v.re) > Rat(1)) return false;
    }

    Measure shifted = mu + nu;
    auto aligned = [&](const Measure& meas) {
      for (const auto& [label, val] : meas.w) {
        if (sgn(val.im) != 0) return false;
        Scalar v = s.eval(f, s.K.index(label));
        if (v.re != Rat(sgn(val.re))) return false;
      }
      return true;
    };
    if (!aligned(mu) || !aligned(shifted)) return false;

    auto b = choquetBoundary(s, opt);
    for (const auto& [label, val] : mu.w)
      if (!b.classification.at(label).isTrue()) return false;
    for (const auto& [label, val] : shifted.w)
      if (!b.classification.at(label).isTrue()) return false;
    for (const auto& [label, val] : nu.w)
      if (!b.classification.at(label).isTrue()) return false;
    return true;
  } catch (...) {
    return false;
  }
}

FunctionSpace affineFunctionSpace(const FunctionSpace& s, const std::string& name,
                                  const AnalysisOptions& opt) {
  requireReal(s, "affine function space");
  size_t n = s.n();
  RMat C;
  for (size_t x = 0; x < n; ++x) {
    Functional phi = evaluationFunctional(s, x);
    for (const Measure& mu : representingVertices(s, phi, opt)) {
      RVec row(n, Rat(0));
      for (const auto& [label, val] : mu.w) row[s.K.index(label)] = val.re;
      row[x] -= Rat(1);
      if (std::any_of(row.begin(), row.end(), [](const Rat& v) { return sgn(v) != 0; }))
        C.push_back(std::move(row));
    }
  }
  RMat basis;
  if (C.empty()) {
    basis.assign(n, RVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) basis[i][i] = Rat(1);
  } else {
    basis = nullspaceBasis(C, n, ratZero);
  }
  if (basis.empty())
    fail("InternalInconsistency", "the affine function space contains the original space");
  std::vector<std::vector<Scalar>> rows(n);
  for (size_t x = 0; x < n; ++x) {
    rows[x].reserve(basis.size());
    for (const RVec& g : basis) rows[x].emplace_back(g[x]);
  }
  return makeSpace(name, Field::Real, s.K.labels, rows);
}

ConditionReport conditionReport(const FunctionSpace& s, const AnalysisOptions& opt) {
  Ctx ctx = makeCtx(s, opt);
  ConditionReport rep;
  rep.boundary = ctx.bnd;
  auto& c = rep.conditions;
  c[kCondInjective] = unitActionInjective(s, ctx.bnd);
  c[kCondTrivialAnnihilators] = trivialAnnihilatorsPrimitive(ctx);
  c[kCondCrossPolytope] = crossPolytopePrimitive(ctx);
  if (s.field == Field::Real) {
    c[kCondFunctionallySimplicial] = functionallySimplicialPrimitive(ctx);
    c[kCondSimplexoid] = simplexoidPrimitive(ctx);
    c[kCondSimplicial] = simplicialPrimitive(ctx);
  } else {
    c[kCondSimplicial] = Verdict::unknown("complex-primitive-unavailable");
    c[kCondFunctionallySimplicial] = Verdict::unknown("complex-primitive-unavailable");
    c[kCondSimplexoid] = Verdict::unknown("complex-primitive-unavailable");
  }
  closeUnderImplications(c);
  return rep;
}

const std::vector<std::string>& conditionOrder() {
  static const std::vector<std::string> order = {
      kCondInjective,           kCondSimplicial, kCondFunctionallySimplicial,
      kCondTrivialAnnihilators, kCondSimplexoid, kCondCrossPolytope};
  return order;
}

} // namespace choquet
