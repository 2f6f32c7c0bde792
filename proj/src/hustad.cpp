#include "choquet/hustad.hpp"

#include <algorithm>
#include <map>

#include "choquet/error.hpp"

namespace choquet {

namespace {

bool atomBefore(const PhaseAtom& a, const PhaseAtom& b) {
  if (a.point != b.point) return a.point < b.point;
  if (a.phase.re != b.phase.re) return a.phase.re < b.phase.re;
  return a.phase.im < b.phase.im;
}

} // namespace

Rat PhasePointMeasure::totalWeight() const {
  Rat w(0);
  for (const PhaseAtom& a : atoms) w += a.weight;
  return w;
}

PhasePointMeasure makePhasePointMeasure(std::vector<PhaseAtom> atoms) {
  for (const PhaseAtom& a : atoms) {
    if (a.phase.normSq() != Rat(1))
      fail("BadParam", "phase at point '" + a.point + "' is not unimodular");
    if (sgn(a.weight) < 0)
      fail("BadParam", "negative weight at point '" + a.point + "'");
  }
  std::sort(atoms.begin(), atoms.end(), atomBefore);
  PhasePointMeasure out;
  for (PhaseAtom& a : atoms) {
    if (sgn(a.weight) == 0) continue;
    if (!out.atoms.empty() && out.atoms.back().point == a.point &&
        out.atoms.back().phase == a.phase)
      out.atoms.back().weight += a.weight;
    else
      out.atoms.push_back(std::move(a));
  }
  return out;
}

PhaseTransfer phaseCollapse(const PhasePointMeasure& nu) {
  PhaseTransfer out;
  for (const PhaseAtom& a : nu.atoms) {
    out.mu.set(a.point, out.mu.at(a.point) + a.phase * Scalar(a.weight));
    out.muTilde.set(a.point, out.muTilde.at(a.point) + Scalar(a.weight));
  }
  // Collapsing can only cancel mass, never create it.
  Rat w = nu.totalWeight();
  NormValue tv = totalVariation(out.mu);
  if (tv.isExact() ? *tv.exact > w : tv.enclosure.lo > w)
    fail("InternalInconsistency", "collapsed measure exceeds the total weight");
  for (const auto& [label, value] : out.mu.w)
    if (out.muTilde.at(label).isZero())
      fail("InternalInconsistency", "collapsed measure escapes the projection support");
  return out;
}

PhasePointMeasure phaseLift(const Measure& mu) {
  NormValue tv = totalVariation(mu);
  if (!tv.isExact())
    fail("IrrationalModulus", "a value of the measure has an irrational modulus");
  if (*tv.exact != Rat(1))
    fail("NormNotOne", "phase lifting needs total variation exactly 1, got " +
                           ratToString(*tv.exact));
  std::vector<PhaseAtom> atoms;
  for (const auto& [label, value] : mu.w) {
    std::optional<Rat> r = exactAbs(value);
    if (!r) fail("IrrationalModulus", "value at '" + label + "' has an irrational modulus");
    atoms.push_back({value / Scalar(*r), label, *r});
  }
  return makePhasePointMeasure(std::move(atoms));
}

bool representsFunctional(const FunctionSpace& s, const PhasePointMeasure& nu,
                          const Functional& phi) {
  return functionalOf(s, phaseCollapse(nu).mu) == phi;
}

} // namespace choquet
