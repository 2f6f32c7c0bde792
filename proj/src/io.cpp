#include "choquet/io.hpp"

#include <fstream>

#include "choquet/error.hpp"

namespace choquet {

json ratToJson(const Rat& r) { return ratToString(r); }

Rat ratFromJson(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail("MalformedScalar", "expected a rational string");
  return ratFromString(j.get<std::string>());
}

json scalarToJson(const Scalar& s) {
  if (s.isReal()) return ratToString(s.re);
  return json{{"re", ratToString(s.re)}, {"im", ratToString(s.im)}};
}

Scalar scalarFromJson(const json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im"))
      fail("MalformedScalar", "complex scalar needs re and im");
    return {ratFromJson(j["re"]), ratFromJson(j["im"])};
  }
  return Scalar(ratFromJson(j));
}

json measureToJson(const Measure& mu) {
  json out = json::object();
  for (const auto& [k, v] : mu.w) out[k] = scalarToJson(v);
  return out;
}

Measure measureFromJson(const json& j) {
  Measure mu;
  if (!j.is_object()) fail("BadParam", "measure must be a label->scalar map");
  for (auto it = j.begin(); it != j.end(); ++it) mu.set(it.key(), scalarFromJson(it.value()));
  return mu;
}

json functionalToJson(const Functional& phi) {
  json arr = json::array();
  for (const auto& c : phi.coeffs) arr.push_back(scalarToJson(c));
  return arr;
}

Functional functionalFromJson(const json& j) {
  Functional phi;
  for (const auto& e : j) phi.coeffs.push_back(scalarFromJson(e));
  return phi;
}

json intervalToJson(const RatInterval& iv) {
  return json{{"lo", ratToString(iv.lo)}, {"hi", ratToString(iv.hi)}};
}

RatInterval intervalFromJson(const json& j) {
  return {ratFromJson(j.at("lo")), ratFromJson(j.at("hi"))};
}

json normValueToJson(const NormValue& nv) {
  if (nv.isExact()) return json{{"exact", ratToString(*nv.exact)}};
  return json{{"enclosure", intervalToJson(nv.enclosure)}};
}

json verdictToJson(const Verdict& v) {
  json out{{"status", statusName(v.status)}, {"method", v.method}};
  if (!v.witness.is_null() && !(v.witness.is_object() && v.witness.empty()))
    out["witness"] = v.witness;
  if (v.enclosure) out["enclosure"] = intervalToJson(*v.enclosure);
  return out;
}

Verdict verdictFromJson(const json& j) {
  Verdict v;
  std::string st = j.at("status").get<std::string>();
  v.status = st == "True" ? Status::True : st == "False" ? Status::False : Status::Unknown;
  v.method = j.value("method", "");
  if (j.contains("witness")) v.witness = j["witness"];
  if (j.contains("enclosure")) v.enclosure = intervalFromJson(j["enclosure"]);
  return v;
}

json saveSpace(const FunctionSpace& s) {
  json basis = json::array();
  for (const auto& r : s.E) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalarToJson(v));
    basis.push_back(row);
  }
  return json{{"schema", kSchemaVersion},
              {"name", s.name},
              {"field", fieldName(s.field)},
              {"points", s.K.labels},
              {"basis", basis}};
}

FunctionSpace loadSpace(const json& doc, std::optional<Field> fieldOverride) {
  if (!doc.is_object()) fail("BadParam", "space document must be an object");
  if (doc.contains("schema") && doc["schema"].get<std::string>() != kSchemaVersion)
    fail("VersionMismatch", "unsupported schema '" + doc["schema"].get<std::string>() + "'");
  for (const char* key : {"field", "points", "basis"})
    if (!doc.contains(key)) fail("BadParam", std::string("space document lacks '") + key + "'");
  Field f = fieldFromName(doc["field"].get<std::string>());
  if (fieldOverride) {
    f = *fieldOverride;
  }
  std::vector<std::string> labels;
  for (const auto& p : doc["points"]) labels.push_back(p.get<std::string>());
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : doc["basis"]) {
    std::vector<Scalar> row;
    for (const auto& v : r) row.push_back(scalarFromJson(v));
    rows.push_back(std::move(row));
  }
  return makeSpace(doc.value("name", std::string("unnamed")), f, std::move(labels),
                   std::move(rows));
}

FunctionSpace loadSpaceFile(const std::string& path, std::optional<Field> fieldOverride) {
  return loadSpace(readJsonFile(path), fieldOverride);
}

std::string spaceDigest(const FunctionSpace& s) {
  std::string text = saveSpace(s).dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json spaceSummary(const FunctionSpace& s) {
  return json{{"name", s.name},
              {"points", s.n()},
              {"dimension", s.m()},
              {"field", fieldName(s.field)},
              {"digest", spaceDigest(s)}};
}

json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadParam", "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    fail("BadParam", "invalid JSON in '" + path + "': " + e.what());
  }
  return doc;
}

void writeJsonFile(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) fail("BadParam", "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

} // namespace choquet
