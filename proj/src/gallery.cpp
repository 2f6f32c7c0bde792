#include "choquet/gallery.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "choquet/error.hpp"
#include "choquet/io.hpp"
#include "choquet/linalg.hpp"
#include "choquet/linprog.hpp"

namespace choquet {
namespace {

bool scalarZero(const Scalar& s) { return s.isZero(); }

Rat gridRat(size_t k, size_t g) {
  Rat r(Int(static_cast<long>(k)), Int(static_cast<long>(g)));
  r.canonicalize();
  return r;
}

std::string gridLabel(size_t k, size_t g) { return ratToString(gridRat(k, g)); }

// Evaluation rows from a list of basis value vectors (each of length n).
std::vector<std::vector<Scalar>> rowsFromBasis(
    const std::vector<std::vector<Scalar>>& basis, size_t n) {
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t x = 0; x < n; ++x) rows[x][j] = basis[j][x];
  return rows;
}

// Certifies |alpha| + |beta| < 1; rejects with BadParam otherwise. A sum of
// two Gaussian-rational moduli can equal 1 only when both moduli are
// rational, so the enclosure fallback always terminates.
void requireContraction(const Scalar& alpha, const Scalar& beta) {
  auto ra = exactAbs(alpha), rb = exactAbs(beta);
  if (ra && rb) {
    if (*ra + *rb >= 1) fail("BadParam", "need |alpha| + |beta| < 1");
    return;
  }
  for (unsigned bits = 40; bits <= 200; bits += 40) {
    Rat w(Int(1), Int(1) << bits);
    RatInterval ia = absEnclosure(alpha, w), ib = absEnclosure(beta, w);
    if (ia.hi + ib.hi < 1) return;
    if (ia.lo + ib.lo >= 1) fail("BadParam", "need |alpha| + |beta| < 1");
  }
  fail("InternalInconsistency", "modulus-sum enclosure failed to converge");
}

void requireFieldFit(Field field, const Scalar& v, const std::string& what) {
  if (field == Field::Real && !v.isReal())
    fail("BadParam", what + " has an imaginary part in real mode");
}

} // namespace

FunctionSpace makeIntervalSpace(int variant, size_t grid, const Scalar& param,
                                Field field) {
  if (variant < 1 || variant > 3) fail("BadParam", "interval variant must be 1, 2 or 3");
  if (grid == 0) fail("BadParam", "interval grid must be positive");
  if (variant == 2) {
    if (param.normSq() != 1 || param == Scalar(1))
      fail("BadParam", "variant 2 needs a unimodular coupling other than 1");
  }
  if (variant == 3) {
    if (param.isZero() || param.normSq() >= 1)
      fail("BadParam", "variant 3 needs a coupling with modulus strictly between 0 and 1");
  }
  if (variant != 1) requireFieldFit(field, param, "coupling");

  const size_t n = grid + 1;
  std::vector<std::string> labels(n);
  for (size_t k = 0; k < n; ++k) labels[k] = gridLabel(k, grid);

  std::vector<std::vector<Scalar>> rows(n);
  if (variant == 1) {
    // basis: the unit function at each nonzero grid point
    for (size_t x = 0; x < n; ++x) {
      rows[x].assign(grid, Scalar());
      if (x > 0) rows[x][x - 1] = Scalar(1);
    }
  } else {
    // basis 0 couples the endpoints; the rest are interior unit functions
    for (size_t x = 0; x < n; ++x) rows[x].assign(grid, Scalar());
    rows[0][0] = Scalar(1);
    rows[n - 1][0] = param;
    for (size_t x = 1; x + 1 < n; ++x) rows[x][x] = Scalar(1);
  }

  std::string name = "interval" + std::to_string(variant) + "(g=" + std::to_string(grid);
  if (variant != 1) name += ",p=" + scalarToString(param);
  name += ")";
  return makeSpace(name, field, std::move(labels), std::move(rows));
}

FunctionSpace makeAnchoredBand(const AnchoredBandParams& p) {
  if (p.variant < 1 || p.variant > 2) fail("BadParam", "band variant must be 1 or 2");
  if (p.grid == 0) fail("BadParam", "band grid must be positive");
  if (p.alpha.isZero() || p.beta.isZero()) fail("BadParam", "anchor weights must be nonzero");
  requireFieldFit(p.field, p.alpha, "alpha");
  requireFieldFit(p.field, p.beta, "beta");
  requireContraction(p.alpha, p.beta);

  const size_t g = p.grid;
  const size_t rowsPerColumn = p.variant == 1 ? 3 : 2 * g + 1;
  const size_t n = (g + 1) * rowsPerColumn + 2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t k = 0; k <= g; ++k) {
    std::string t = gridLabel(k, g);
    if (p.variant == 1) {
      labels.push_back("(" + t + ",-1)");
      labels.push_back("(" + t + ",0)");
      labels.push_back("(" + t + ",1)");
    } else {
      for (long j = -static_cast<long>(g); j <= static_cast<long>(g); ++j) {
        Rat s(Int(j), Int(static_cast<long>(g)));
        s.canonicalize();
        labels.push_back("(" + t + "," + ratToString(s) + ")");
      }
    }
  }
  labels.push_back("a");
  labels.push_back("b");

  auto idx = [&](size_t k, long j) { // j in {-1, 0, 1} means s = j
    size_t off = p.variant == 1 ? static_cast<size_t>(j + 1)
                                : static_cast<size_t>(j * static_cast<long>(g) +
                                                      static_cast<long>(g));
    return k * rowsPerColumn + off;
  };
  const size_t ia = n - 2, ib = n - 1;

  std::vector<std::vector<Scalar>> cons;
  for (size_t k = 0; k <= g; ++k) {
    std::vector<Scalar> row(n, Scalar());
    row[idx(k, 0)] = Scalar(1);
    row[idx(k, -1)] = Scalar(Rat(-1, 2));
    row[idx(k, 1)] = Scalar(Rat(-1, 2));
    cons.push_back(std::move(row));
  }
  {
    std::vector<Scalar> row(n, Scalar());
    row[idx(0, 0)] = Scalar(1);
    row[ia] = -p.alpha;
    row[ib] = -p.beta;
    cons.push_back(std::move(row));
  }

  auto basis = nullspaceBasis(cons, n, scalarZero);
  std::string name = "band" + std::to_string(p.variant) + "(g=" + std::to_string(g) +
                     ",a=" + scalarToString(p.alpha) + ",b=" + scalarToString(p.beta) + ")";
  return makeSpace(name, p.field, std::move(labels), rowsFromBasis(basis, n));
}

FunctionSpace makePorcupine(const std::vector<std::string>& spine,
                            const std::vector<std::string>& quills, Field field) {
  if (quills.empty()) fail("EmptyA", "the quill set must be nonempty");
  if (spine.size() < 2) fail("BadParam", "the spine needs at least two points");
  std::set<std::string> spineSet(spine.begin(), spine.end());
  std::set<std::string> quillSet(quills.begin(), quills.end());
  for (const std::string& q : quillSet)
    if (spineSet.count(q) == 0)
      fail("BadParam", "quill label \"" + q + "\" is not on the spine");

  std::vector<std::string> labels;
  std::vector<std::array<size_t, 3>> triples; // (t,-1), (t,0), (t,1) indices
  for (const std::string& t : spine) {
    if (quillSet.count(t) != 0) {
      size_t base = labels.size();
      labels.push_back("(" + t + ",-1)");
      labels.push_back("(" + t + ",0)");
      labels.push_back("(" + t + ",1)");
      triples.push_back({base, base + 1, base + 2});
    } else {
      labels.push_back("(" + t + ",0)");
    }
  }
  const size_t n = labels.size();

  std::vector<std::vector<Scalar>> cons;
  for (const auto& tr : triples) {
    std::vector<Scalar> row(n, Scalar());
    row[tr[1]] = Scalar(1);
    row[tr[0]] = Scalar(Rat(-1, 2));
    row[tr[2]] = Scalar(Rat(-1, 2));
    cons.push_back(std::move(row));
  }

  auto basis = nullspaceBasis(cons, n, scalarZero);
  std::string name = "porcupine(|L|=" + std::to_string(spine.size()) +
                     ",|A|=" + std::to_string(quillSet.size()) + ")";
  return makeSpace(name, field, std::move(labels), rowsFromBasis(basis, n));
}

FunctionSpace makeSquareAffine(Field field) {
  std::vector<std::string> labels = {"(0,0)", "(1,0)", "(0,1)", "(1,1)", "(1/2,1/2)"};
  std::vector<std::vector<Scalar>> rows = {
      {Scalar(1), Scalar(0), Scalar(0)},
      {Scalar(1), Scalar(1), Scalar(0)},
      {Scalar(1), Scalar(0), Scalar(1)},
      {Scalar(1), Scalar(1), Scalar(1)},
      {Scalar(1), Scalar(Rat(1, 2)), Scalar(Rat(1, 2))},
  };
  return makeSpace("square-affine", field, std::move(labels), std::move(rows));
}

FunctionSpace makeTwoPoint(Field field) {
  std::vector<std::string> labels = {"0", "1"};
  std::vector<std::vector<Scalar>> rows = {{Scalar(1)}, {Scalar(-1)}};
  return makeSpace("two-point", field, std::move(labels), std::move(rows));
}

FunctionSpace makeBalancedPairSpace(size_t grid, Field field) {
  if (grid == 0) fail("BadParam", "grid must be positive");
  const size_t n = 3 * grid + 1;
  std::vector<std::string> labels(n);
  for (size_t k = 0; k < n; ++k) labels[k] = gridLabel(k, grid);

  std::vector<std::vector<Scalar>> cons(1, std::vector<Scalar>(n, Scalar()));
  cons[0][0] = Scalar(1);
  cons[0][grid] = Scalar(1);
  cons[0][2 * grid] = Scalar(-1);
  cons[0][3 * grid] = Scalar(-1);

  auto basis = nullspaceBasis(cons, n, scalarZero);
  return makeSpace("balanced-pair(g=" + std::to_string(grid) + ")", field,
                   std::move(labels), rowsFromBasis(basis, n));
}

namespace {

json fourPointWitnessJson(const Scalar& alpha, const Scalar& beta,
                          const std::array<Scalar, 4>& c,
                          const std::array<Scalar, 4>& x) {
  json w;
  w["alpha"] = scalarToJson(alpha);
  w["beta"] = scalarToJson(beta);
  w["c"] = json::array();
  w["x"] = json::array();
  for (int i = 0; i < 4; ++i) {
    w["c"].push_back(scalarToJson(c[i]));
    w["x"].push_back(scalarToJson(x[i]));
  }
  return w;
}

// Exhaustive sign-pattern search over the reals. Coefficient signs sig and
// shifted-value signs tau run over {-1,0,1}^4; within a pattern both defining
// conditions are linear, so each case is a small feasibility program.
Verdict realFourPointDecision(const Rat& a, const Rat& b) {
  const std::array<Rat, 4> shift = {Rat(1, 2), Rat(1, 2), Rat(-a), Rat(-b)};
  const std::array<Rat, 4> line = {Rat(1, 2), Rat(1, 2), Rat(-a), Rat(-b)};
  int sig[4], tau[4];
  for (int smask = 0; smask < 81; ++smask) {
    int v = smask;
    for (int i = 0; i < 4; ++i) { sig[i] = v % 3 - 1; v /= 3; }
    for (int tmask = 0; tmask < 81; ++tmask) {
      int u = tmask;
      for (int i = 0; i < 4; ++i) { tau[i] = u % 3 - 1; u /= 3; }

      LinearProgram lp;
      int xvar[4] = {-1, -1, -1, -1};
      size_t nv = 4;
      for (int i = 0; i < 4; ++i)
        if (sig[i] == 0) xvar[i] = static_cast<int>(nv++);
      lp.nvars = nv;

      for (int i = 0; i < 4; ++i) {
        if (sig[i] == 0) {
          auto& r = lp.newEqRow(Rat(0));
          r[i] = 1;
        } else {
          auto& r = lp.newLeRow(Rat(0));
          r[i] = Rat(-sig[i]);
        }
      }
      for (int i = 0; i < 4; ++i) {
        if (tau[i] == 0) {
          auto& r = lp.newEqRow(shift[i]);
          r[i] = 1;
        } else {
          auto& r = lp.newLeRow(Rat(-tau[i]) * shift[i]);
          r[i] = Rat(-tau[i]);
        }
      }
      { // total modulus is preserved by the shift
        Rat rhs(0);
        for (int i = 0; i < 4; ++i) rhs -= Rat(tau[i]) * shift[i];
        auto& r = lp.newEqRow(rhs);
        for (int i = 0; i < 4; ++i) r[i] = Rat(sig[i] - tau[i]);
      }
      { // the alignment line; entries with zero sign stay free in [-1, 1]
        Rat rhs(0);
        for (int i = 0; i < 4; ++i)
          if (sig[i] != 0) rhs -= line[i] * Rat(sig[i]);
        auto& r = lp.newEqRow(rhs);
        for (int i = 0; i < 4; ++i)
          if (sig[i] == 0) r[xvar[i]] = line[i];
      }
      for (int i = 0; i < 4; ++i) {
        if (sig[i] != 0) continue;
        auto& r1 = lp.newLeRow(Rat(1));
        r1[xvar[i]] = 1;
        auto& r2 = lp.newLeRow(Rat(1));
        r2[xvar[i]] = -1;
      }

      LPResult res = lpSolve(lp);
      if (res.status != LPResult::Status::Optimal) continue;

      std::array<Scalar, 4> c, x;
      for (int i = 0; i < 4; ++i) {
        c[i] = Scalar(res.x[i]);
        x[i] = sig[i] != 0 ? Scalar(sig[i]) : Scalar(res.x[xvar[i]]);
      }
      json w = fourPointWitnessJson(Scalar(a), Scalar(b), c, x);
      if (!verifyFourPointWitness(Scalar(a), Scalar(b), w))
        fail("InternalInconsistency", "four-point witness failed its own re-check");
      return Verdict::no("contact-pattern-search", w);
    }
  }
  return Verdict::yes("contact-pattern-exhaustion", json{{"patternsTried", 81 * 81}});
}

} // namespace

Verdict anchoredBandFourPointDecision(const Scalar& alpha, const Scalar& beta,
                                      Field field) {
  if (alpha.isZero() || beta.isZero()) fail("BadParam", "anchor weights must be nonzero");
  requireFieldFit(field, alpha, "alpha");
  requireFieldFit(field, beta, "beta");
  requireContraction(alpha, beta);

  if (field == Field::Real) return realFourPointDecision(alpha.re, beta.re);

  if (alpha.isReal() && beta.isReal()) {
    Verdict real = realFourPointDecision(alpha.re, beta.re);
    if (real.isFalse()) return real; // a real witness stays a witness
    if (sgn(alpha.re) > 0 && sgn(beta.re) > 0 && alpha.re != beta.re)
      return Verdict::yes("real-parameter-transfer",
                          json{{"note", "distinct positive real anchor weights"}});
    return Verdict::unknown("undecided-complex-parameters",
                            json{{"reason", "no exact witness and no transfer applies"}});
  }

  auto ra = exactAbs(alpha), rb = exactAbs(beta);
  if (ra && rb && *ra == *rb) {
    std::array<Scalar, 4> c = {Scalar(Rat(1, 2)), Scalar(), Scalar(), -beta};
    std::array<Scalar, 4> x = {Scalar(1), Scalar(-1), alpha.conj() / Scalar(*ra),
                               -(beta.conj() / Scalar(*rb))};
    json w = fourPointWitnessJson(alpha, beta, c, x);
    if (!verifyFourPointWitness(alpha, beta, w))
      fail("InternalInconsistency", "equal-modulus witness failed its own re-check");
    return Verdict::no("equal-modulus-shift", w);
  }
  return Verdict::unknown("undecided-complex-parameters",
                          json{{"reason", "anchor moduli not exactly comparable"}});
}

bool verifyFourPointWitness(const Scalar& alpha, const Scalar& beta,
                            const json& witness) {
  try {
    if (!witness.contains("c") || !witness.contains("x")) return false;
    if (witness["c"].size() != 4 || witness["x"].size() != 4) return false;
    std::array<Scalar, 4> c, x;
    for (int i = 0; i < 4; ++i) {
      c[i] = scalarFromJson(witness["c"][i]);
      x[i] = scalarFromJson(witness["x"][i]);
      if (x[i].normSq() > 1) return false;
    }
    // alignment line
    Scalar lhs = (x[0] + x[1]) * Scalar(Rat(1, 2));
    if (lhs != alpha * x[2] + beta * x[3]) return false;
    // per-entry alignment: c_i x_i = |c_i| whenever c_i is nonzero
    for (int i = 0; i < 4; ++i) {
      if (c[i].isZero()) continue;
      Scalar p = c[i] * x[i];
      if (sgn(p.im) != 0 || sgn(p.re) < 0 || p.re * p.re != c[i].normSq()) return false;
    }
    // shift keeps the total modulus
    std::array<Scalar, 4> s = {c[0] - Scalar(Rat(1, 2)), c[1] - Scalar(Rat(1, 2)),
                               c[2] + alpha, c[3] + beta};
    bool allExact = true;
    Rat sumC(0), sumS(0);
    for (int i = 0; i < 4 && allExact; ++i) {
      auto mc = exactAbs(c[i]), ms = exactAbs(s[i]);
      if (mc && ms) { sumC += *mc; sumS += *ms; }
      else allExact = false;
    }
    if (allExact) return sumC == sumS;
    // pairing fallback: a modulus-preserving bijection between the two sides
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      bool match = true;
      for (int i = 0; i < 4 && match; ++i)
        match = c[i].normSq() == s[perm[i]].normSq();
      if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

ShiftBoundResult modulusShiftBound(const Scalar& z, const Rat& gamma, const Rat& t) {
  if (z.normSq() != 1) fail("BadParam", "z must be exactly unimodular");
  if (sgn(gamma) == 0) fail("BadParam", "gamma must be nonzero");
  if (sgn(t) < 0) fail("BadParam", "t must be nonnegative");
  // With L = t - gamma Re z and S = |t z - gamma|^2 the bound reads
  // t - sqrt(S) <= gamma Re z, i.e. L <= sqrt(S); both sides are rational
  // after squaring, so the comparison is exact.
  Rat a = z.re;
  Rat L = t - gamma * a;
  Rat S = t * t - Rat(2) * gamma * t * a + gamma * gamma;
  ShiftBoundResult r;
  if (sgn(L) <= 0) {
    r.holds = true;
    r.strict = sgn(L) < 0 || sgn(S) > 0;
  } else {
    r.holds = L * L <= S;
    r.strict = L * L < S;
  }
  return r;
}

FunctionSpace randomSpace(size_t n, size_t m, uint64_t seed,
                          const RandomSpaceOptions& opt) {
  if (m < 2 || m > n || n > 10) fail("BadParam", "need 2 <= m <= n <= 10");
  std::mt19937_64 rng(seed);
  auto entry = [&]() {
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<long> num(-4, 4);
    long d = den(rng);
    Rat re(Int(num(rng)), Int(d));
    re.canonicalize();
    if (opt.field == Field::Real) return Scalar(re);
    long d2 = den(rng);
    Rat im(Int(num(rng)), Int(d2));
    im.canonicalize();
    return Scalar(re, im);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(m));
    for (size_t x = 0; x < n; ++x)
      for (size_t j = 0; j < m; ++j)
        rows[x][j] = (opt.forceConstants && j == 0) ? Scalar(1) : entry();
    if (matrixRank(rows, scalarZero) != m) continue;
    bool separated = true;
    for (size_t i = 0; i < n && separated; ++i)
      for (size_t j = i + 1; j < n && separated; ++j)
        separated = !(rows[i] == rows[j]);
    if (!separated) continue;
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
    std::string name = "random(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                       ",seed=" + std::to_string(seed) +
                       (opt.forceConstants ? ",constants" : "") + ")";
    return makeSpace(std::move(name), opt.field, std::move(labels), std::move(rows));
  }
  fail("ResamplingExhausted", "no separating independent sample in 64 attempts");
}

} // namespace choquet
