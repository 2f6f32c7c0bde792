#pragma once

#include <cstdint>
#include <vector>

#include "choquet/scalar.hpp"

namespace choquet {

inline constexpr size_t kDefaultRayBudget = 200000;

// Extreme rays of the pointed cone {u in R^dim : M u >= 0}. Requires the
// rows of M to have rank == dim (otherwise the cone has a lineality space).
// Rays are returned as primitive integer vectors. Throws RayBudgetExceeded
// if the intermediate ray count passes `budget`.
RMat coneExtremeRays(const RMat& M, size_t dim, size_t budget = kDefaultRayBudget);

// One facet-defining inequality normal.x <= offset of a full-dimensional
// polytope, with the indices of the input points lying on the facet.
struct Facet {
  RVec normal;
  Rat offset;
  std::vector<size_t> incident;
};

// All facets of conv(points). The points must affinely span R^dim.
std::vector<Facet> facetEnumeration(const RMat& points, size_t dim,
                                    size_t budget = kDefaultRayBudget);

// Vertices of the standard-form polytope {x >= 0 : A x = b}.
// Throws UnboundedInput when the feasible set is unbounded.
RMat standardFormVertices(const RMat& A, const RVec& b,
                          size_t budget = kDefaultRayBudget);

bool inConvexHull(const RVec& v, const RMat& pts);

// Membership of v in {sum c_i p_i : sum |c_i| <= 1} (real coefficients).
bool inAbsoluteHull(const RVec& v, const RMat& pts);

// Dimension of the affine hull of the points (0 for a single point).
size_t affineDimension(const RMat& pts);

// Unit-modulus rational grid on the circle, listed counterclockwise from 1
// and closed under multiplication by i. `secBound` is a certified rational
// upper bound for sec(g/2), where g is the largest angular gap; it is kept
// strictly below sec(pi/requested), so the grid covers the circle at least
// as tightly as an ideal grid of the requested size.
struct PhaseGrid {
  std::vector<Scalar> points;
  Rat secBound;
  size_t requested = 0;
  size_t size() const { return points.size(); }
};

PhaseGrid buildPhaseGrid(size_t n);

} // namespace choquet
