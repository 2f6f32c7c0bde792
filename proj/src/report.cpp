#include "choquet/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "choquet/boundary.hpp"
#include "choquet/dirichlet.hpp"
#include "choquet/error.hpp"
#include "choquet/gallery.hpp"
#include "choquet/hustad.hpp"
#include "choquet/io.hpp"
#include "choquet/representation.hpp"

namespace choquet {

namespace {

using Clock = std::chrono::steady_clock;

long long msSince(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

json optionsJson(const ReportOptions& opt) {
  json o;
  o["seed"] = opt.analysis.seed;
  o["phaseGrid"] = opt.analysis.phaseGridN;
  o["rayBudget"] = opt.analysis.rayBudget;
  o["signPatternBudget"] = opt.analysis.signPatternBudget;
  o["fieldOverride"] =
      opt.fieldOverride ? json(fieldName(*opt.fieldOverride)) : json(nullptr);
  return o;
}

ReportOptions optionsFromJson(const json& o) {
  ReportOptions opt;
  opt.analysis.seed = o.at("seed").get<uint64_t>();
  opt.analysis.phaseGridN = o.at("phaseGrid").get<size_t>();
  opt.analysis.rayBudget = o.at("rayBudget").get<size_t>();
  opt.analysis.signPatternBudget = o.at("signPatternBudget").get<size_t>();
  if (!o.at("fieldOverride").is_null())
    opt.fieldOverride = fieldFromName(o.at("fieldOverride").get<std::string>());
  return opt;
}

json baseReport(const std::string& command, const FunctionSpace& s,
                const ReportOptions& opt) {
  json r;
  r["schema"] = kSchemaVersion;
  r["toolVersion"] = kToolVersion;
  r["command"] = command;
  r["options"] = optionsJson(opt);
  r["space"] = spaceSummary(s);
  r["spaceDocument"] = saveSpace(s);
  return r;
}

json boundaryJson(const FunctionSpace& s, const BoundaryAnalysis& b) {
  json cls = json::object();
  for (const std::string& label : s.K.labels)
    cls[label] = verdictToJson(b.classification.at(label));
  json out;
  out["classification"] = cls;
  out["members"] = b.members;
  out["complete"] = b.complete;
  return out;
}

// Random signed rational measure normalized to total variation one.
Measure randomUnitMeasure(const FunctionSpace& s, std::mt19937_64& rng) {
  Measure mu;
  Rat tv(0);
  for (const std::string& label : s.K.labels) {
    if (rng() % 3 == 0) continue; // keep some points out of the support
    long num = static_cast<long>(rng() % 9) - 4;
    if (num == 0) continue;
    Rat w(num, static_cast<long>(1 + rng() % 4));
    w.canonicalize();
    mu.set(label, Scalar(w));
    tv += ratAbs(w);
  }
  if (tv == 0) {
    mu.set(s.K.labels[0], Scalar(1));
    tv = 1;
  }
  return mu.scaled(Scalar(Rat(Rat(1) / tv)));
}

// Finite phase-transfer laws on real data: a unit-variation measure lifts to
// a probability measure on signs x points and collapses back unchanged, and
// an arbitrary probability measure on signs x points collapses to a measure
// dominated pointwise by its plain projection.  Returns a description of the
// first broken law, or empty.
std::string phaseTransferFailure(const FunctionSpace& s, std::mt19937_64& rng) {
  Measure mu = randomUnitMeasure(s, rng);
  NormValue tvn = totalVariation(mu);
  if (!tvn.exact || *tvn.exact != 1) return "normalization did not reach variation one";

  PhasePointMeasure lift = phaseLift(mu);
  if (lift.totalWeight() != 1) return "lift is not a probability measure";
  for (const PhaseAtom& atom : lift.atoms)
    if (sgn(atom.phase.im) != 0) return "real measure lifted to a non-real phase";
  PhaseTransfer back = phaseCollapse(lift);
  if (!(back.mu == mu)) return "collapse does not invert the lift";
  for (const auto& [label, v] : mu.w)
    if (!(back.muTilde.at(label) == Scalar(ratAbs(v.re))))
      return "plain projection differs from the pointwise modulus";
  if (!representsFunctional(s, lift, functionalOf(s, mu)))
    return "lift stopped representing the induced functional";

  // forward direction on a probability measure that is not a lift
  std::vector<PhaseAtom> atoms;
  Rat total(0);
  for (const std::string& label : s.K.labels) {
    for (long sign : {1L, -1L}) {
      if (rng() % 2 == 0) continue;
      Rat w(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 4));
      w.canonicalize();
      atoms.push_back({Scalar(Rat(sign)), label, w});
      total += w;
    }
  }
  if (atoms.empty()) {
    atoms.push_back({Scalar(Rat(1)), s.K.labels[0], Rat(1)});
    total = 1;
  }
  for (PhaseAtom& atom : atoms) atom.weight /= total;
  PhasePointMeasure nu = makePhasePointMeasure(std::move(atoms));
  PhaseTransfer fwd = phaseCollapse(nu);
  NormValue fn = totalVariation(fwd.mu);
  if (!fn.exact || *fn.exact > 1) return "collapsed measure exceeds the lifted mass";
  for (const auto& [label, v] : fwd.mu.w) {
    Scalar cap = fwd.muTilde.at(label);
    if (sgn(cap.im) != 0 || ratAbs(v.re) > cap.re)
      return "collapsed measure escapes its plain projection";
  }
  return "";
}

Scalar pythagoreanPoint(const Rat& q) {
  Rat d = 1 + q * q;
  Rat re = (1 - q * q) / d;
  Rat im = 2 * q / d;
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

std::string majorOf(const std::string& version) {
  return version.substr(0, version.find('.'));
}

json stripTiming(json r) {
  r.erase("timing");
  return r;
}

// Path of the first leaf where the two documents disagree; empty when equal.
std::string firstDifference(const json& a, const json& b, const std::string& path) {
  if (a == b) return "";
  if (a.is_object() && b.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) return path + "/" + it.key();
      std::string d = firstDifference(it.value(), b.at(it.key()), path + "/" + it.key());
      if (!d.empty()) return d;
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) return path + "/" + it.key();
    return path.empty() ? "/" : path; // same keys and values, different order
  }
  if (a.is_array() && b.is_array()) {
    size_t shared = std::min(a.size(), b.size());
    for (size_t i = 0; i < shared; ++i) {
      std::string d = firstDifference(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return path + "/length";
  }
  return path.empty() ? "/" : path;
}

} // namespace

json analyzeReport(const FunctionSpace& s, const ReportOptions& opt) {
  json report = baseReport("analyze", s, opt);
  auto t0 = Clock::now();
  ConditionReport cr = conditionReport(s, opt.analysis);
  json conds = json::object();
  for (const std::string& key : conditionOrder())
    conds[key] = verdictToJson(cr.conditions.at(key));
  json result;
  result["boundary"] = boundaryJson(s, cr.boundary);
  result["conditions"] = conds;
  report["result"] = result;
  long long total = msSince(t0);
  report["timing"] = json{{"conditionsMs", total}, {"totalMs", total}};
  return report;
}

json boundaryReport(const FunctionSpace& s, const ReportOptions& opt) {
  json report = baseReport("boundary", s, opt);
  auto t0 = Clock::now();
  BoundaryAnalysis b = choquetBoundary(s, opt.analysis);
  long long boundaryMs = msSince(t0);
  auto t1 = Clock::now();
  json norms = json::object();
  for (size_t x = 0; x < s.n(); ++x)
    norms[s.K.labels[x]] =
        normValueToJson(dualNorm(s, evaluationFunctional(s, x), opt.analysis));
  json result;
  result["boundary"] = boundaryJson(s, b);
  result["evaluationNorms"] = norms;
  result["phaseClasses"] = phaseClasses(s);
  result["unitActionInjective"] = verdictToJson(unitActionInjective(s, b));
  report["result"] = result;
  report["timing"] = json{{"boundaryMs", boundaryMs},
                          {"evaluationNormsMs", msSince(t1)},
                          {"totalMs", msSince(t0)}};
  return report;
}

json dirichletReport(const FunctionSpace& s, const ReportOptions& opt) {
  json report = baseReport("dirichlet", s, opt);
  auto t0 = Clock::now();
  DilationPair p = dilation(s, opt.analysis);
  long long dilationMs = msSince(t0);
  json delta = json::object();
  for (size_t x = 0; x < p.labels.size(); ++x)
    delta[p.labels[x]] = measureToJson(p.delta[x]);
  auto rows = [](const std::vector<std::vector<Scalar>>& mat) {
    json out = json::array();
    for (const auto& row : mat) {
      json r = json::array();
      for (const Scalar& v : row) r.push_back(scalarToJson(v));
      out.push_back(r);
    }
    return out;
  };
  auto t1 = Clock::now();
  json result;
  result["labels"] = p.labels;
  result["delta"] = delta;
  result["matrix"] = rows(p.D);
  result["absoluteMatrix"] = rows(p.Dtilde);
  result["suite"] = dilationPropertySuite(s, opt.analysis);
  report["result"] = result;
  report["timing"] = json{{"dilationMs", dilationMs},
                          {"propertySuiteMs", msSince(t1)},
                          {"totalMs", msSince(t0)}};
  return report;
}

json suiteReport(const SuiteParams& p) {
  auto t0 = Clock::now();
  json report;
  report["schema"] = kSchemaVersion;
  report["toolVersion"] = kToolVersion;
  report["command"] = "suite";
  json o;
  o["randomCount"] = p.randomCount;
  o["shiftSweep"] = p.shiftSweep;
  o["seed"] = p.seed;
  o["phaseGrid"] = p.phaseGridN;
  report["options"] = o;

  AnalysisOptions aopt;
  aopt.phaseGridN = p.phaseGridN;
  aopt.seed = p.seed;

  json violations = json::array();
  size_t reproIndex = 0;
  auto record = [&](const std::string& kind, const std::string& detail,
                    const json& summary, const json& reproducer) {
    json v;
    v["kind"] = kind;
    v["detail"] = detail;
    if (!summary.is_null()) v["space"] = summary;
    std::string name = "reproducer-" + std::to_string(reproIndex++) + ".json";
    v["reproducer"] = name;
    if (!p.reproducerDir.empty()) {
      json doc;
      doc["schema"] = kSchemaVersion;
      doc["kind"] = kind;
      doc["detail"] = detail;
      doc["suiteOptions"] = o;
      for (auto it = reproducer.begin(); it != reproducer.end(); ++it)
        doc[it.key()] = it.value();
      writeJsonFile(p.reproducerDir + "/" + name, doc);
    }
    violations.push_back(v);
  };

  std::mt19937_64 rng(p.seed);
  size_t dirichletChecked = 0;
  size_t phaseTransferChecked = 0;
  std::map<std::string, std::map<std::string, size_t>> tally;

  for (size_t i = 0; i < p.randomCount; ++i) {
    size_t n = 2 + static_cast<size_t>(rng() % 5);
    size_t maxM = std::min<size_t>(4, n);
    size_t m = 2 + static_cast<size_t>(rng() % (maxM - 1));
    RandomSpaceOptions ropt;
    ropt.forceConstants = (rng() % 2) == 0;
    uint64_t spaceSeed = rng();
    FunctionSpace s = randomSpace(n, m, spaceSeed, ropt);
    json reproducer;
    reproducer["spaceSeed"] = spaceSeed;
    reproducer["space"] = saveSpace(s);

    std::map<std::string, Verdict> conds;
    try {
      ConditionReport cr = conditionReport(s, aopt);
      conds = cr.conditions;
      for (const auto& [key, v] : conds) tally[key][statusName(v.status)]++;
    } catch (const Error& e) {
      record("implicationLattice", e.what(), spaceSummary(s), reproducer);
      continue;
    }

    try {
      std::string err = affineClosureDisagreement(s, aopt);
      if (!err.empty())
        record("affineClosure", err, spaceSummary(s), reproducer);
    } catch (const Error& e) {
      record("affineClosure", e.what(), spaceSummary(s), reproducer);
    }

    if (conds.at(kCondSimplicial).isTrue()) {
      ++dirichletChecked;
      try {
        json suite = dilationPropertySuite(s, aopt);
        if (!suite.at("pass").get<bool>()) {
          std::string broken = "property suite failed";
          for (const json& c : suite.at("checks"))
            if (!c.at("pass").get<bool>()) {
              broken = c.at("name").get<std::string>();
              break;
            }
          record("dilationSuite", broken, spaceSummary(s), reproducer);
        }
      } catch (const Error& e) {
        record("dilationSuite", e.what(), spaceSummary(s), reproducer);
      }
    }

    ++phaseTransferChecked;
    std::string herr = phaseTransferFailure(s, rng);
    if (!herr.empty())
      record("phaseTransfer", herr, spaceSummary(s), reproducer);
  }
  long long randomMs = msSince(t0);

  auto t1 = Clock::now();
  const std::vector<Rat> gammas = {Rat(2),     Rat(-2),    Rat(1),
                                   Rat(-1),    Rat(1, 2),  Rat(-1, 2)};
  const std::vector<Rat> shifts = {Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(10)};
  for (size_t k = 0; k < p.shiftSweep; ++k) {
    Scalar z;
    if (k == 0) {
      z = Scalar(Rat(1));
    } else if (k == 1) {
      z = Scalar(Rat(-1)); // not reached by the rational parametrization
    } else {
      long num = static_cast<long>(rng() % 1999) - 999;
      Rat q(num, static_cast<long>(1 + rng() % 999));
      q.canonicalize();
      z = pythagoreanPoint(q);
    }
    bool holdsAll = true;
    bool strictAll = true;
    for (const Rat& g : gammas)
      for (const Rat& t : shifts) {
        ShiftBoundResult r = modulusShiftBound(z, g, t);
        holdsAll = holdsAll && r.holds;
        strictAll = strictAll && r.strict;
      }
    bool onRealAxis = sgn(z.im) == 0;
    if (!holdsAll || strictAll == onRealAxis) {
      json reproducer;
      reproducer["z"] = scalarToJson(z);
      record("shiftBound",
             std::string(!holdsAll ? "bound fails" : "strictness misclassified") +
                 " at z = " + scalarToString(z),
             json(), reproducer);
    }
  }
  long long sweepMs = msSince(t1);

  json tallyJson = json::object();
  for (const std::string& key : conditionOrder()) {
    json counts = json::object();
    for (const char* st : {"True", "False", "Unknown"}) {
      auto it = tally.find(key);
      size_t c = it == tally.end() ? 0 : it->second[st];
      counts[st] = c;
    }
    tallyJson[key] = counts;
  }

  json result;
  result["spacesChecked"] = p.randomCount;
  result["conditionTally"] = tallyJson;
  result["dilationSuitesChecked"] = dirichletChecked;
  result["phaseTransfersChecked"] = phaseTransferChecked;
  result["shiftParametersChecked"] = p.shiftSweep;
  result["violations"] = violations;
  result["pass"] = violations.empty();
  report["result"] = result;
  report["timing"] = json{{"randomSpacesMs", randomMs},
                          {"shiftSweepMs", sweepMs},
                          {"totalMs", msSince(t0)}};
  return report;
}

std::string affineClosureDisagreement(const FunctionSpace& s,
                                      const AnalysisOptions& opt) {
  FunctionSpace ac = affineFunctionSpace(s, s.name + "-closure", opt);
  FunctionSpace ac2 = affineFunctionSpace(ac, s.name + "-closure2", opt);
  if (ac2.m() != ac.m()) return "closure is not idempotent: dimension changes";
  for (size_t j = 0; j < ac2.m(); ++j) {
    std::vector<Scalar> unit(ac2.m(), Scalar());
    unit[j] = Scalar(1);
    if (!ac.coefficientsFor(ac2.values(unit)))
      return "closure is not idempotent: a basis function escapes the span";
  }
  BoundaryAnalysis b1 = choquetBoundary(s, opt);
  BoundaryAnalysis b2 = choquetBoundary(ac, opt);
  if (b1.members != b2.members || !b1.complete || !b2.complete)
    return "Choquet boundary changes under the closure";
  for (size_t x = 0; x < s.n(); ++x) {
    NormValue n1 = dualNorm(s, evaluationFunctional(s, x), opt);
    NormValue n2 = dualNorm(ac, evaluationFunctional(ac, x), opt);
    if (!n1.exact || !n2.exact || *n1.exact != *n2.exact)
      return "evaluation norm at \"" + s.K.labels[x] + "\" changes under the closure";
  }
  Verdict s1 = isSimplicial(s, opt);
  Verdict s2 = isSimplicial(ac, opt);
  if (s1.status != s2.status)
    return "simpliciality does not transfer to the closure";
  return "";
}

void verifyReport(const json& report) {
  if (!report.is_object() || !report.contains("schema") ||
      !report.contains("toolVersion") || !report.contains("command"))
    fail("VersionMismatch", "not a report document");
  if (report.at("schema").get<std::string>() != kSchemaVersion)
    fail("VersionMismatch", "unsupported schema " + report.at("schema").dump());
  std::string version = report.at("toolVersion").get<std::string>();
  if (majorOf(version) != majorOf(kToolVersion))
    fail("VersionMismatch",
         "report from tool version " + version + ", this tool is " + kToolVersion);

  const std::string command = report.at("command").get<std::string>();
  std::string digest = "-";
  json fresh;
  if (command == "suite") {
    const json& o = report.at("options");
    SuiteParams p;
    p.randomCount = o.at("randomCount").get<size_t>();
    p.shiftSweep = o.at("shiftSweep").get<size_t>();
    p.seed = o.at("seed").get<uint64_t>();
    p.phaseGridN = o.at("phaseGrid").get<size_t>();
    p.reproducerDir.clear(); // a replay never rewrites reproducers
    fresh = suiteReport(p);
  } else if (command == "analyze" || command == "boundary" ||
             command == "dirichlet") {
    FunctionSpace s = loadSpace(report.at("spaceDocument"));
    digest = spaceDigest(s);
    if (digest != report.at("space").at("digest").get<std::string>())
      fail("WitnessFailure", "space document hashes to " + digest +
                                 ", report claims " +
                                 report.at("space").at("digest").dump());
    ReportOptions opt = optionsFromJson(report.at("options"));
    if (command == "analyze") {
      // re-check the embedded non-uniqueness witness on its own before the replay
      const json& conds = report.at("result").at("conditions");
      if (s.field == Field::Real && conds.contains(kCondFunctionallySimplicial)) {
        const json& v = conds.at(kCondFunctionallySimplicial);
        if (v.at("status").get<std::string>() == "False" && v.contains("witness")) {
          const json& w = v.at("witness");
          if (w.is_object() && w.contains("nu") && w.contains("mu") &&
              w.contains("normingFunction") &&
              !verifyNonUniquenessWitness(s, w, opt.analysis))
            fail("WitnessFailure",
                 "embedded non-uniqueness witness for space " + digest +
                     " does not re-verify");
        }
      }
      fresh = analyzeReport(s, opt);
    } else if (command == "boundary") {
      fresh = boundaryReport(s, opt);
    } else {
      fresh = dirichletReport(s, opt);
    }
  } else {
    fail("VersionMismatch", "unknown command \"" + command + "\"");
  }

  std::string diff = firstDifference(stripTiming(report), stripTiming(fresh), "");
  if (!diff.empty())
    fail("WitnessFailure", "replay of " + command + " disagrees at " + diff +
                               " (space " + digest + ")");
}

} // namespace choquet
