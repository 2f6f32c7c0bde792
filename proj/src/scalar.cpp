#include "choquet/scalar.hpp"

#include <cctype>

#include "choquet/error.hpp"

namespace choquet {

Rat ratFromString(const std::string& s) {
  if (s.empty()) fail("MalformedScalar", "empty scalar string");
  size_t i = 0;
  auto isIntBody = [&](size_t from, size_t to) {
    if (from >= to) return false;
    size_t j = from;
    if (s[j] == '-' || s[j] == '+') ++j;
    if (j >= to) return false;
    for (; j < to; ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!isIntBody(0, s.size())) fail("MalformedScalar", "not an integer or p/q: '" + s + "'");
    return Rat(s);
  }
  if (!isIntBody(0, slash) || !isIntBody(slash + 1, s.size()))
    fail("MalformedScalar", "not a p/q fraction: '" + s + "'");
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::invalid_argument&) {
    fail("MalformedScalar", "unparsable rational: '" + s + "'");
  }
  if (r.get_den() == 0) fail("MalformedScalar", "zero denominator: '" + s + "'");
  r.canonicalize();
  (void)i;
  return r;
}

std::string ratToString(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string scalarToString(const Scalar& s) {
  if (s.isReal()) return ratToString(s.re);
  return ratToString(s.re) + (sgn(s.im) >= 0 ? "+" : "") + ratToString(s.im) + "i";
}

RatInterval intervalMul(const RatInterval& a, const RatInterval& b) {
  Rat v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo, v4 = a.hi * b.hi;
  Rat lo = std::min(std::min(v1, v2), std::min(v3, v4));
  Rat hi = std::max(std::max(v1, v2), std::max(v3, v4));
  return {lo, hi};
}

unsigned dyadicBits(const Rat& w) {
  // smallest k with 2^-k <= w
  unsigned k = 0;
  Rat p(1);
  while (p > w && k < 4096) {
    p /= 2;
    ++k;
  }
  return k;
}

RatInterval sqrtEnclosure(const Rat& x, const Rat& maxWidth) {
  if (x < 0) fail("MalformedScalar", "sqrt of negative rational");
  if (x == 0) return {Rat(0), Rat(0)};
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k so the integer sqrt gives width 1/(q*2^k)
  Int p = x.get_num(), q = x.get_den();
  unsigned k = dyadicBits(maxWidth * q) + 1;
  Int scaled = p * q;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int den = q;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  Rat lo(root, den), hi(root + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::optional<Rat> exactSqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rat(0);
  Int p = x.get_num(), q = x.get_den();
  Int sp, sq;
  mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
  mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
  if (sp * sp != p || sq * sq != q) return std::nullopt;
  Rat r(sp, sq);
  r.canonicalize();
  return r;
}

std::optional<Rat> exactAbs(const Scalar& z) {
  if (z.isReal()) return ratAbs(z.re);
  return exactSqrt(z.normSq());
}

RatInterval absEnclosure(const Scalar& z, const Rat& maxWidth) {
  if (auto e = exactAbs(z)) return {*e, *e};
  return sqrtEnclosure(z.normSq(), maxWidth);
}

RatInterval piEnclosure() {
  static const Rat lo("314159265358979323846264338327950288419716939937510/"
                      "100000000000000000000000000000000000000000000000000");
  static const Rat hi("314159265358979323846264338327950288419716939937512/"
                      "100000000000000000000000000000000000000000000000000");
  return {lo, hi};
}

RatInterval cosEnclosure(const RatInterval& x, const Rat& maxWidth) {
  // cos on |x| <= 4 via the alternating Taylor series with interval argument.
  // cos is even, so work with x^2 (interval square, careful around zero).
  Rat a = x.lo * x.lo, b = x.hi * x.hi;
  RatInterval x2;
  if (x.lo <= 0 && x.hi >= 0)
    x2 = {Rat(0), std::max(a, b)};
  else
    x2 = {std::min(a, b), std::max(a, b)};
  RatInterval sum(Rat(1));
  RatInterval term(Rat(1)); // x^(2k)/(2k)! as an interval
  Rat tail;
  unsigned k = 0;
  while (true) {
    ++k;
    term = intervalMul(term, x2);
    term = {term.lo / (2 * k - 1) / (2 * k), term.hi / (2 * k - 1) / (2 * k)};
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    // alternating-series remainder once terms decrease: |x|^2 < (2k+1)(2k+2)
    tail = std::max(ratAbs(term.lo), ratAbs(term.hi));
    if (x2.hi < Rat((2 * k + 1) * (2 * k + 2)) && tail <= maxWidth / 4 && k >= 4) break;
    if (k > 64) break;
  }
  RatInterval out = {sum.lo - tail, sum.hi + tail};
  if (out.lo < -1) out.lo = -1;
  if (out.hi > 1) out.hi = 1;
  return out;
}

} // namespace choquet
