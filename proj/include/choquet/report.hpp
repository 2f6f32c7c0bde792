#pragma once

#include <optional>
#include <string>

#include "choquet/types.hpp"

namespace choquet {

inline constexpr const char* kToolVersion = "0.1.0";

// Everything a command needs to rebuild its result deterministically.  The
// field override is recorded in the report so `verify` can replay the run.
struct ReportOptions {
  AnalysisOptions analysis;
  std::optional<Field> fieldOverride;
};

// Self-contained report documents: schema + tool version, the options used,
// the full space document, the per-command result, and a timing block.  The
// timing block is the only nondeterministic part and is ignored whenever two
// reports are compared.
json analyzeReport(const FunctionSpace& s, const ReportOptions& opt = {});
json boundaryReport(const FunctionSpace& s, const ReportOptions& opt = {});
json dirichletReport(const FunctionSpace& s, const ReportOptions& opt = {});

struct SuiteParams {
  size_t randomCount = 0;  // seeded random spaces to push through the oracle network
  size_t shiftSweep = 0;   // unimodular parameters for the modulus shift bound sweep
  uint64_t seed = 0;
  size_t phaseGridN = 64;
  // Violations drop a reproducer document into this directory; empty disables
  // writing (used when a suite report is replayed for verification).
  std::string reproducerDir = ".";
};

json suiteReport(const SuiteParams& p);

// First disagreement between a space and its affinely generated closure —
// the closure must keep the Choquet boundary, the evaluation norms, and the
// simpliciality verdict, and must be idempotent.  Empty when all four laws
// hold.  Real field only.
std::string affineClosureDisagreement(const FunctionSpace& s,
                                      const AnalysisOptions& opt = {});

// Re-checks a report end to end: schema and major version, space digest,
// a deterministic replay with the recorded options compared field by field
// (timing excluded), plus an independent re-verification of any embedded
// non-uniqueness witness.  Throws Error("VersionMismatch") for documents this
// tool cannot replay and Error("WitnessFailure") when the replay disagrees.
void verifyReport(const json& report);

} // namespace choquet
