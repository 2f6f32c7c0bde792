#include "choquet/types.hpp"

#include <algorithm>
#include <set>

#include "choquet/error.hpp"
#include "choquet/linalg.hpp"

namespace choquet {

std::string fieldName(Field f) { return f == Field::Real ? "real" : "complex"; }

Field fieldFromName(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  fail("BadParam", "unknown field '" + s + "'");
}

size_t FiniteCompact::index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  fail("UnknownPoint", "no point labeled '" + label + "'");
}

bool FiniteCompact::has(const std::string& label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

Scalar FunctionSpace::eval(const std::vector<Scalar>& coeffs, size_t x) const {
  Scalar v(0);
  for (size_t j = 0; j < m(); ++j) v += E[x][j] * coeffs[j];
  return v;
}

std::vector<Scalar> FunctionSpace::values(const std::vector<Scalar>& coeffs) const {
  std::vector<Scalar> out(n());
  for (size_t i = 0; i < n(); ++i) out[i] = eval(coeffs, i);
  return out;
}

std::optional<std::vector<Scalar>> FunctionSpace::coefficientsFor(
    const std::vector<Scalar>& vals) const {
  auto isZero = [](const Scalar& v) { return v.isZero(); };
  auto [ok, x] = solveLinear<Scalar>(E, vals, isZero);
  if (!ok) return std::nullopt;
  return x;
}

FunctionSpace makeSpace(std::string name, Field field,
                        std::vector<std::string> labels,
                        std::vector<std::vector<Scalar>> rows) {
  if (labels.size() < 2) fail("BadParam", "a space needs at least two points");
  if (rows.size() != labels.size()) fail("BadParam", "row count != point count");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail("DuplicatePoints", "point '" + l + "' appears twice");
  size_t m = rows[0].size();
  if (m == 0) fail("BadParam", "empty basis");
  for (const auto& r : rows)
    if (r.size() != m) fail("BadParam", "ragged evaluation matrix");
  if (field == Field::Real)
    for (const auto& r : rows)
      for (const auto& v : r)
        if (!v.isReal()) fail("MalformedScalar", "complex entry in a real-mode space");
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i] == rows[j])
        fail("NonSeparating", "points '" + labels[i] + "' and '" + labels[j] +
                                  "' have identical rows");
  auto isZero = [](const Scalar& v) { return v.isZero(); };
  // column independence: rank of E^T = m
  Matrix<Scalar> t(m, std::vector<Scalar>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = rows[i][j];
  if (matrixRank(t, isZero) != m) fail("DependentBasis", "basis columns are dependent");

  FunctionSpace s;
  s.name = std::move(name);
  s.field = field;
  s.K.labels = std::move(labels);
  s.E = std::move(rows);
  std::vector<Scalar> ones(s.n(), Scalar(1));
  s.containsConstants = s.coefficientsFor(ones).has_value();
  return s;
}

bool Measure::isZero() const {
  for (const auto& [k, v] : w)
    if (!v.isZero()) return false;
  return true;
}

Scalar Measure::at(const std::string& label) const {
  auto it = w.find(label);
  return it == w.end() ? Scalar(0) : it->second;
}

void Measure::set(const std::string& label, const Scalar& v) {
  if (v.isZero())
    w.erase(label);
  else
    w[label] = v;
}

Measure Measure::operator+(const Measure& o) const {
  Measure out = *this;
  for (const auto& [k, v] : o.w) out.set(k, out.at(k) + v);
  return out;
}

Measure Measure::operator-(const Measure& o) const {
  Measure out = *this;
  for (const auto& [k, v] : o.w) out.set(k, out.at(k) - v);
  return out;
}

Measure Measure::scaled(const Scalar& c) const {
  Measure out;
  for (const auto& [k, v] : w) out.set(k, v * c);
  return out;
}

bool Measure::operator==(const Measure& o) const {
  for (const auto& [k, v] : w)
    if (!(v - o.at(k)).isZero()) return false;
  for (const auto& [k, v] : o.w)
    if (!(v - at(k)).isZero()) return false;
  return true;
}

Measure pointMass(const std::string& label, const Scalar& v) {
  Measure m;
  m.set(label, v);
  return m;
}

bool Functional::isZero() const {
  for (const auto& c : coeffs)
    if (!c.isZero()) return false;
  return true;
}

Functional evaluationFunctional(const FunctionSpace& s, size_t x) {
  return Functional{s.row(x)};
}

Functional functionalOf(const FunctionSpace& s, const Measure& mu) {
  Functional phi;
  phi.coeffs.assign(s.m(), Scalar(0));
  for (const auto& [label, v] : mu.w) {
    size_t x = s.K.index(label);
    for (size_t j = 0; j < s.m(); ++j) phi.coeffs[j] += v * s.E[x][j];
  }
  return phi;
}

Scalar integrate(const FunctionSpace& s, const std::vector<Scalar>& coeffs,
                 const Measure& mu) {
  if (coeffs.size() != s.m()) fail("DimensionMismatch", "coefficient vector has wrong length");
  Scalar acc(0);
  for (const auto& [label, v] : mu.w) acc += s.eval(coeffs, s.K.index(label)) * v;
  return acc;
}

NormValue totalVariation(const Measure& mu) {
  Rat exact(0);
  bool allRational = true;
  RatInterval sum(Rat(0));
  static const Rat width = [] {
    Rat w(1);
    for (int i = 0; i < 44; ++i) w /= 2;
    return w;
  }();
  for (const auto& [k, v] : mu.w) {
    if (auto a = exactAbs(v)) {
      exact += *a;
      sum = sum + RatInterval(*a);
    } else {
      allRational = false;
      sum = sum + absEnclosure(v, width);
    }
  }
  if (allRational) return NormValue::ofExact(exact);
  return {std::nullopt, sum};
}

RVec realifyVector(const std::vector<Scalar>& v) {
  RVec out(2 * v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].re;
    out[v.size() + i] = v[i].im;
  }
  return out;
}

RVec realVector(const std::vector<Scalar>& v) {
  RVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i].im) != 0)
      fail("InternalInconsistency", "imaginary component in a real-field computation");
    out[i] = v[i].re;
  }
  return out;
}

std::string statusName(Status s) {
  switch (s) {
    case Status::True: return "True";
    case Status::False: return "False";
    default: return "Unknown";
  }
}

Verdict Verdict::yes(std::string method, json witness) {
  return {Status::True, std::move(witness), std::move(method), std::nullopt};
}
Verdict Verdict::no(std::string method, json witness) {
  return {Status::False, std::move(witness), std::move(method), std::nullopt};
}
Verdict Verdict::unknown(std::string method, json witness) {
  return {Status::Unknown, std::move(witness), std::move(method), std::nullopt};
}

} // namespace choquet
