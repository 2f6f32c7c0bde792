#pragma once

#include <string>
#include <vector>

#include "choquet/types.hpp"

namespace choquet {

// Weighted atom at (phase, point); the phase is exactly unimodular.
struct PhaseAtom {
  Scalar phase;
  std::string point;
  Rat weight;

  bool operator==(const PhaseAtom& o) const {
    return phase == o.phase && point == o.point && weight == o.weight;
  }
};

// A nonnegative measure on (unit scalars) x (points), stored atom by atom in
// a canonical order.
struct PhasePointMeasure {
  std::vector<PhaseAtom> atoms;

  Rat totalWeight() const;
  bool operator==(const PhasePointMeasure& o) const { return atoms == o.atoms; }
};

// Validates phases (|phase|^2 = 1 exactly) and weights (>= 0; exact zeros are
// dropped), merges atoms sharing a (phase, point) pair, sorts canonically.
PhasePointMeasure makePhasePointMeasure(std::vector<PhaseAtom> atoms);

// Scalar measure obtained by integrating out the phase, together with the
// plain projection onto the point coordinate.
struct PhaseTransfer {
  Measure mu;      // sum of phase * weight per point
  Measure muTilde; // sum of weight per point
};

PhaseTransfer phaseCollapse(const PhasePointMeasure& nu);

// Reverse transfer for a measure of total variation exactly 1: one atom
// (value/|value|, point, |value|) per support point. Every modulus must be an
// exact rational.
PhasePointMeasure phaseLift(const Measure& mu);

// Whether the collapsed measure of nu induces exactly phi on the space.
bool representsFunctional(const FunctionSpace& s, const PhasePointMeasure& nu,
                          const Functional& phi);

} // namespace choquet
