#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "choquet/types.hpp"

namespace choquet {

// Operator norm of phi on the sup-norm unit ball of the space. Exact over the
// reals; over the complex field a certified enclosure obtained from polygonal
// relaxations of the modulus constraints, refined through a nested chain of
// phase grids up to the configured size (clamped to [8, 1024]). The final
// enclosure is contained in the finest grid's enclosure, so its upper/lower
// ratio stays within that grid's certified secant bound.
NormValue dualNorm(const FunctionSpace& s, const Functional& phi,
                   const AnalysisOptions& opt = {});

// Per-point verdicts for "the evaluation at this point is an extreme point of
// the dual unit ball". Complete over the reals; over the complex field a point
// can come back Unknown when neither the inner hull test nor the peak-function
// test settles it at the configured grid size.
struct BoundaryAnalysis {
  std::map<std::string, Verdict> classification;
  std::vector<std::string> members; // decided-yes labels in point order
  bool complete = true;             // no Unknown verdicts
};

BoundaryAnalysis choquetBoundary(const FunctionSpace& s,
                                 const AnalysisOptions& opt = {});

// Partition of the points into classes whose evaluations agree up to a
// unimodular scalar (up to sign over the reals). Exact in both fields.
std::vector<std::vector<std::string>> phaseClasses(const FunctionSpace& s);

// Injectivity of (alpha, x) -> alpha * evaluation_x on unit scalars times the
// Choquet boundary: fails exactly when two distinct boundary points are
// unimodular multiples of each other.
Verdict unitActionInjective(const FunctionSpace& s,
                            const AnalysisOptions& opt = {});
Verdict unitActionInjective(const FunctionSpace& s, const BoundaryAnalysis& b);

// Exact test for target == u * base with |u| = 1; the ratio when it exists.
std::optional<Scalar> unimodularRatio(const std::vector<Scalar>& target,
                                      const std::vector<Scalar>& base);

// Coefficients of a function peaking at x: h(x) = 1 and |h(y)| < 1 for every
// y whose evaluation is not a unimodular multiple of the one at x. Over the
// complex field the strict bound is certified through the grid's secant bound;
// nullopt when no certified peak function is found.
std::optional<std::vector<Scalar>> peakFunction(const FunctionSpace& s,
                                                const std::string& label,
                                                const AnalysisOptions& opt = {});

// Coefficients of a function with h(a) = 1, |h(b)| = 1, and |h(y)| at most
// 1 - margin on the rest of the space; such a function certifies that both a
// and b lie in the Choquet boundary. Returns nullopt when none is found at
// the configured phase resolution.
std::optional<std::vector<Scalar>> pairPeakFunction(const FunctionSpace& s,
                                                    const std::string& labelA,
                                                    const std::string& labelB,
                                                    const Rat& margin = Rat(1, 1000),
                                                    const AnalysisOptions& opt = {});

// The set {phi : ||phi|| <= 1, phi(1) = 1} for a space containing the
// constants; its extreme points are the boundary evaluations. Coordinates are
// realified when the field is complex.
struct StateSpaceInfo {
  std::vector<std::string> vertexLabels;
  RMat vertices;
  size_t affineDim = 0;
  bool simplex = false;
};

StateSpaceInfo stateSpace(const FunctionSpace& s, const AnalysisOptions& opt = {});

} // namespace choquet
