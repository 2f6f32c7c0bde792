#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace choquet {

using Rat = mpq_class;
using Int = mpz_class;

// "p/q" or "p"; throws MalformedScalar on anything else (including q = 0).
Rat ratFromString(const std::string& s);
std::string ratToString(const Rat& r);

inline int sgn(const Rat& r) { return sgn(r.get_num()); }
inline Rat ratAbs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Element of Q(i): exact complex rational. Real-mode data keeps im = 0.
struct Scalar {
  Rat re, im;

  Scalar() : re(0), im(0) {}
  Scalar(const Rat& r) : re(r), im(0) {}
  Scalar(long n) : re(n), im(0) {}
  Scalar(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }
  Scalar conj() const { return {re, Rat(-im)}; }
  Rat normSq() const { return re * re + im * im; }

  Scalar operator-() const { return {Rat(-re), Rat(-im)}; }
  Scalar operator+(const Scalar& o) const { return {re + o.re, im + o.im}; }
  Scalar operator-(const Scalar& o) const { return {re - o.re, im - o.im}; }
  Scalar operator*(const Scalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Scalar operator/(const Scalar& o) const {
    Rat d = o.normSq();
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

std::string scalarToString(const Scalar& s);

// Closed rational interval; the enclosure currency for irrational moduli.
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rat& v) : lo(v), hi(v) {}
  RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {}

  Rat width() const { return hi - lo; }
  bool isPoint() const { return lo == hi; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
};

RatInterval intervalMul(const RatInterval& a, const RatInterval& b);

// Certified enclosure of sqrt(x), x >= 0: lo^2 <= x <= hi^2, hi - lo <= maxWidth.
RatInterval sqrtEnclosure(const Rat& x, const Rat& maxWidth);

// Exact rational square root when x is a perfect square of a rational.
std::optional<Rat> exactSqrt(const Rat& x);

// |z| exactly when rational, otherwise nullopt.
std::optional<Rat> exactAbs(const Scalar& z);

// Certified enclosure of |z|.
RatInterval absEnclosure(const Scalar& z, const Rat& maxWidth);

// Certified enclosure of cos(x) for a rational interval argument, |x| <= 4.
RatInterval cosEnclosure(const RatInterval& x, const Rat& maxWidth);

// Tight rational enclosure of pi (width < 2^-100).
RatInterval piEnclosure();

// Power-of-two denominator helper: smallest k with 2^-k <= w.
unsigned dyadicBits(const Rat& w);

} // namespace choquet
