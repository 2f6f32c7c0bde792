#pragma once

#include <string>
#include <vector>

#include "choquet/representation.hpp"
#include "choquet/types.hpp"

namespace choquet {

// Dilation data of a simplicial space. Row x of D lists the unique
// norm-preserving boundary measure representing the evaluation at x in point
// coordinates; row x of Dtilde is its entrywise absolute value.
struct DilationPair {
  std::vector<std::string> labels;          // point order shared by all fields
  std::vector<Measure> delta;               // delta[x], keyed by point label
  std::vector<std::vector<Scalar>> D;       // n x n, D[x][y] = delta[x]({y})
  std::vector<std::vector<Scalar>> Dtilde;  // n x n, |delta[x]({y})|
};

// Builds the pair, checking on the way that every boundary point represents
// itself and that each delta_x is boundary-supported with total variation
// equal to the dual norm of the evaluation. Real field only
// (ComplexUndecided); refuses with NotSimplicial when some evaluation has two
// norm-preserving boundary representations.
DilationPair dilation(const FunctionSpace& s, const AnalysisOptions& opt = {});

// (Df)(x) = sum_y D[x][y] f(y) for a full value vector f of length n.
std::vector<Scalar> applyDilation(const DilationPair& p,
                                  const std::vector<Scalar>& f);
std::vector<Scalar> applyAbsoluteDilation(const DilationPair& p,
                                          const std::vector<Scalar>& f);

// Adjoint action on measures: (D mu)(y) = sum_x mu(x) D[x][y].
Measure adjointDilation(const DilationPair& p, const Measure& mu);
Measure adjointAbsoluteDilation(const DilationPair& p, const Measure& mu);

// Exhaustive property run: exact structural identities on the matrices plus
// seeded random spot checks of the adjoint calculus. Returns a report with
// one entry per check; "pass" is their conjunction, and any false entry
// signals an internal inconsistency in the library rather than a property of
// the input.
json dilationPropertySuite(const FunctionSpace& s, const AnalysisOptions& opt = {});

} // namespace choquet
