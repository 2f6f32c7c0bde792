#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "choquet/types.hpp"

namespace choquet {

// Grid space {0, 1/g, ..., 1} with a single endpoint constraint encoded in
// the basis: variant 1 pins f(0) = 0; variant 2 couples f(1) = p f(0) for a
// unimodular p != 1; variant 3 couples f(1) = p f(0) for 0 < |p| < 1.
FunctionSpace makeIntervalSpace(int variant, size_t grid,
                                const Scalar& param = Scalar(),
                                Field field = Field::Real);

// Parameters of the anchored-band family.
struct AnchoredBandParams {
  int variant = 1;       // 1: rows s in {-1, 0, 1}; 2: rows s on a [-1,1] grid
  size_t grid = 2;       // discretizes [0,1] as {0, 1/g, ..., 1}
  Scalar alpha{Rat(1, 4)};
  Scalar beta{Rat(1, 2)};
  Field field = Field::Real;
};

// Band of grid points (t, s) plus two isolated anchor points a and b. Each
// column midpoint (t, 0) averages the column extremes (t, -1) and (t, 1),
// and the left midpoint (0, 0) is pinned to alpha f(a) + beta f(b), where
// alpha, beta are nonzero with |alpha| + |beta| < 1.
FunctionSpace makeAnchoredBand(const AnchoredBandParams& p);

// Spine points (t, 0), plus a quill pair (t, -1), (t, 1) over each label in
// quills, with (t, 0) forced to be the pair average. Contains the constants.
FunctionSpace makePorcupine(const std::vector<std::string>& spine,
                            const std::vector<std::string>& quills,
                            Field field = Field::Real);

// Affine functions of the plane sampled on the unit square's corners and
// center; basis {1, first coordinate, second coordinate}.
FunctionSpace makeSquareAffine(Field field = Field::Real);

// Two points coupled by f(1) = -f(0); a one-dimensional space.
FunctionSpace makeTwoPoint(Field field = Field::Real);

// Grid version of {f on [0,3] : f(0) + f(1) = f(2) + f(3)}.
FunctionSpace makeBalancedPairSpace(size_t grid, Field field = Field::Real);

// Specialized functional-simpliciality decision for the anchored band.  The
// band fails exactly when four coefficients c at the contact points (0,1),
// (0,-1), a, b keep their total modulus under the shift by
// (-1/2, -1/2, +alpha, +beta) while an alignment vector x with |x_i| <= 1,
// (x_1 + x_2)/2 = alpha x_3 + beta x_4 and sum c_i x_i = sum |c_i| exists.
// True = functionally simplicial; False carries {c, x} as the witness.
Verdict anchoredBandFourPointDecision(const Scalar& alpha, const Scalar& beta,
                                      Field field);

// Exact re-check of a four-point witness against the two defining conditions.
bool verifyFourPointWitness(const Scalar& alpha, const Scalar& beta,
                            const json& witness);

// Exact evaluation of |t z| - |t z - gamma| <= gamma Re(z) for an exactly
// unimodular z, real gamma != 0 and t >= 0; the bound always holds, and it is
// strict exactly when it avoids the collinear plateau cases at z = +-1.
struct ShiftBoundResult {
  bool holds = false;
  bool strict = false;
};

ShiftBoundResult modulusShiftBound(const Scalar& z, const Rat& gamma, const Rat& t);

// Seeded random separating space with independent basis columns.
struct RandomSpaceOptions {
  bool forceConstants = false;
  Field field = Field::Real;
};

FunctionSpace randomSpace(size_t n, size_t m, uint64_t seed,
                          const RandomSpaceOptions& opt = {});

} // namespace choquet
