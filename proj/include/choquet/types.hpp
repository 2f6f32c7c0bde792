#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "choquet/scalar.hpp"

#include <nlohmann/json.hpp>

namespace choquet {

using json = nlohmann::ordered_json;

enum class Field { Real, Complex };

std::string fieldName(Field f);
Field fieldFromName(const std::string& s);

// Finite compact space: an ordered list of distinct point labels.
struct FiniteCompact {
  std::vector<std::string> labels;

  size_t size() const { return labels.size(); }
  size_t index(const std::string& label) const; // throws UnknownPoint
  bool has(const std::string& label) const;
};

// A point-separating function space given by its n x m evaluation matrix:
// row x holds the values of the m basis functions at point x.  Functions are
// coefficient vectors c, f(x) = row_x . c.
struct FunctionSpace {
  std::string name;
  Field field = Field::Real;
  FiniteCompact K;
  std::vector<std::vector<Scalar>> E; // n rows, m columns
  bool containsConstants = false;

  size_t n() const { return K.size(); }
  size_t m() const { return E.empty() ? 0 : E[0].size(); }
  const std::vector<Scalar>& row(size_t i) const { return E[i]; }

  // f(x) for a coefficient vector (length m), x by index.
  Scalar eval(const std::vector<Scalar>& coeffs, size_t x) const;
  // full value vector of a coefficient vector
  std::vector<Scalar> values(const std::vector<Scalar>& coeffs) const;
  // coefficients of the function with the given values, if it lies in the span
  std::optional<std::vector<Scalar>> coefficientsFor(const std::vector<Scalar>& values) const;
};

// Validates every FunctionSpace invariant; the only way to build one.
FunctionSpace makeSpace(std::string name, Field field,
                        std::vector<std::string> labels,
                        std::vector<std::vector<Scalar>> rows);

// Scalar-valued measure with finite support, keyed by point label.
struct Measure {
  std::map<std::string, Scalar> w;

  bool isZero() const;
  Scalar at(const std::string& label) const;
  void set(const std::string& label, const Scalar& v); // drops exact zeros
  Measure operator+(const Measure& o) const;
  Measure operator-(const Measure& o) const;
  Measure scaled(const Scalar& c) const;
  bool operator==(const Measure& o) const;
};

Measure pointMass(const std::string& label, const Scalar& v = Scalar(1));

// Member of H^*, coordinates in the dual basis: phi(f) = coeffs . c.
struct Functional {
  std::vector<Scalar> coeffs;

  bool isZero() const;
  bool operator==(const Functional& o) const { return coeffs == o.coeffs; }
};

Functional evaluationFunctional(const FunctionSpace& s, size_t x);
// E^T mu: the functional a measure induces on H.
Functional functionalOf(const FunctionSpace& s, const Measure& mu);

// exact sum f(x) mu(x); DimensionMismatch if coeffs has wrong length
Scalar integrate(const FunctionSpace& s, const std::vector<Scalar>& coeffs, const Measure& mu);

// Exact total variation when every modulus is rational; otherwise a certified
// enclosure of width < 2^-40.
struct NormValue {
  std::optional<Rat> exact;
  RatInterval enclosure;

  static NormValue ofExact(const Rat& v) { return {v, RatInterval(v)}; }
  bool isExact() const { return exact.has_value(); }
};

NormValue totalVariation(const Measure& mu);

// Real coordinates of complex data: [Re v..., Im v...] (length 2m), and the
// real-field projection [Re v...] which insists every imaginary part is zero.
RVec realifyVector(const std::vector<Scalar>& v);
RVec realVector(const std::vector<Scalar>& v);

enum class Status { True, False, Unknown };

std::string statusName(Status s);

// Three-valued verdict with a machine-checkable witness payload.
struct Verdict {
  Status status = Status::Unknown;
  json witness;         // structure depends on the condition
  std::string method;   // how the verdict was reached
  std::optional<RatInterval> enclosure; // for quantitative claims

  static Verdict yes(std::string method, json witness = json::object());
  static Verdict no(std::string method, json witness = json::object());
  static Verdict unknown(std::string method, json witness = json::object());
  bool decided() const { return status != Status::Unknown; }
  bool isTrue() const { return status == Status::True; }
  bool isFalse() const { return status == Status::False; }
};

// Options threaded through every analysis: phase grid size for complex work,
// the seed for randomized searches, the ray cap for cone enumeration, and the
// case cap for sign-pattern searches (0 forces the facet route).
struct AnalysisOptions {
  size_t phaseGridN = 64;
  uint64_t seed = 0;
  size_t rayBudget = 200000;
  size_t signPatternBudget = 262144;
};

} // namespace choquet
