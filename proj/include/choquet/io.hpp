#pragma once

#include <string>

#include "choquet/types.hpp"

namespace choquet {

inline constexpr const char* kSchemaVersion = "choquet-lab/1";

json ratToJson(const Rat& r);
Rat ratFromJson(const json& j);
json scalarToJson(const Scalar& s);          // "p/q" or {re, im}
Scalar scalarFromJson(const json& j);
json measureToJson(const Measure& mu);
Measure measureFromJson(const json& j);
json functionalToJson(const Functional& phi);
Functional functionalFromJson(const json& j);
json intervalToJson(const RatInterval& iv);
RatInterval intervalFromJson(const json& j);
json normValueToJson(const NormValue& nv);
json verdictToJson(const Verdict& v);
Verdict verdictFromJson(const json& j);

// Space documents. loadSpace validates every invariant; fieldOverride forces
// the stated field when compatible.
json saveSpace(const FunctionSpace& s);
FunctionSpace loadSpace(const json& doc,
                        std::optional<Field> fieldOverride = std::nullopt);
FunctionSpace loadSpaceFile(const std::string& path,
                            std::optional<Field> fieldOverride = std::nullopt);

// FNV-1a over the canonical space document; stable content digest.
std::string spaceDigest(const FunctionSpace& s);
json spaceSummary(const FunctionSpace& s); // name, n, m, field, digest

json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const json& doc);

} // namespace choquet
