#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "choquet/boundary.hpp"
#include "choquet/types.hpp"

namespace choquet {

// Vertex measures of {mu : mu acts like phi on the space and ||mu|| = ||phi||},
// over all points, respectively restricted to the Choquet boundary.
// Real field only.
std::vector<Measure> representingVertices(const FunctionSpace& s, const Functional& phi,
                                          const AnalysisOptions& opt = {});
std::vector<Measure> boundaryRepresentingVertices(const FunctionSpace& s, const Functional& phi,
                                                  const AnalysisOptions& opt = {});

// Basis of the space of annihilating measures supported on the Choquet
// boundary (works in both fields; needs a fully decided boundary).
std::vector<Measure> boundaryAnnihilatorBasis(const FunctionSpace& s,
                                              const AnalysisOptions& opt = {});

// One exact member of the norm-preserving representing set of phi, plus a
// second distinct member when that set is not a singleton. Real field only.
struct RepresentationProbe {
  Measure first;
  std::optional<Measure> second;

  bool unique() const { return !second.has_value(); }
};

RepresentationProbe representationUniqueness(const FunctionSpace& s, const Functional& phi,
                                             bool boundaryOnly,
                                             const AnalysisOptions& opt = {});

// The unique norm-preserving boundary measure representing the evaluation at
// the given point, or nullopt when it is not unique. Real field only.
std::optional<Measure> uniqueBoundaryRepresentation(const FunctionSpace& s,
                                                    const std::string& label,
                                                    const AnalysisOptions& opt = {});

// The six structural conditions. Keys used in reports:
inline constexpr const char* kCondInjective = "unitActionInjective";
inline constexpr const char* kCondSimplicial = "simplicial";
inline constexpr const char* kCondFunctionallySimplicial = "functionallySimplicial";
inline constexpr const char* kCondTrivialAnnihilators = "trivialBoundaryAnnihilators";
inline constexpr const char* kCondSimplexoid = "simplexoid";
inline constexpr const char* kCondCrossPolytope = "dualBallCrossPolytope";

// Every point evaluation has a unique norm-preserving boundary representation.
Verdict isSimplicial(const FunctionSpace& s, const AnalysisOptions& opt = {});

// Every functional has a unique norm-preserving boundary representation.
Verdict isFunctionallySimplicial(const FunctionSpace& s, const AnalysisOptions& opt = {});

// No nonzero annihilating measure lives on the Choquet boundary.
Verdict hasOnlyTrivialBoundaryAnnihilators(const FunctionSpace& s,
                                           const AnalysisOptions& opt = {});

// Every facet of the dual unit ball is a simplex.
Verdict isSimplexoid(const FunctionSpace& s, const AnalysisOptions& opt = {});

// The dual unit ball is the absolutely convex hull of exactly dim(H)
// independent evaluation directions (so the dual space is an L1 space).
Verdict isL1Predual(const FunctionSpace& s, const AnalysisOptions& opt = {});

// Re-checks a recorded nonuniqueness witness: nu annihilates the space, mu
// and mu+nu are distinct boundary measures aligned with the recorded norming
// function, hence equal-norm representations of the same functional.
bool verifyNonUniquenessWitness(const FunctionSpace& s, const json& witness,
                                const AnalysisOptions& opt = {});

// The space of functions g with g(x) = mu(g) for every point x and every
// norm-preserving measure mu representing the evaluation at x. Contains the
// original space. Real field only.
FunctionSpace affineFunctionSpace(const FunctionSpace& s, const std::string& name,
                                  const AnalysisOptions& opt = {});

// All six conditions plus the boundary, with implication closure: whenever a
// condition is settled, everything it forces (or contradicts) is filled in.
// Throws InternalInconsistency if the computed verdicts violate the known
// implications.
struct ConditionReport {
  BoundaryAnalysis boundary;
  std::map<std::string, Verdict> conditions;
};

ConditionReport conditionReport(const FunctionSpace& s, const AnalysisOptions& opt = {});

// Report key order for stable output.
const std::vector<std::string>& conditionOrder();

} // namespace choquet
