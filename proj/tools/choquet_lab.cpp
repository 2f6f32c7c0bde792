// Command-line front end: load function-space documents, run the analyses,
// and emit self-contained machine-verifiable reports.
//
// Exit codes: 0 ok, 1 input error, 2 internal inconsistency (a proved law
// failed, i.e. a bug), 3 witness failure during verification.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "choquet/error.hpp"
#include "choquet/gallery.hpp"
#include "choquet/io.hpp"
#include "choquet/report.hpp"
#include "choquet/representation.hpp"

using namespace choquet;

namespace {

int exitCodeFor(const Error& e) {
  if (e.code() == "InternalInconsistency") return 2;
  if (e.code() == "WitnessFailure") return 3;
  return 1;
}

void emitError(const std::string& code, const std::string& message) {
  json diag;
  diag["error"] = code;
  diag["message"] = message;
  std::cerr << diag.dump(2) << "\n";
}

struct OutputSink {
  std::string outPath;
  bool asJson = false;

  // Reports go to --out when given; stdout carries either the full document
  // (--json) or the short human summary.
  void deliver(const json& doc, const std::string& summary) const {
    if (!outPath.empty()) writeJsonFile(outPath, doc);
    if (asJson)
      std::cout << doc.dump(2) << "\n";
    else if (!summary.empty())
      std::cout << summary << "\n";
  }
};

std::string spaceLine(const json& report) {
  const json& s = report.at("space");
  return s.at("name").get<std::string>() + " [" +
         s.at("digest").get<std::string>() + "] field=" +
         s.at("field").get<std::string>() +
         " points=" + std::to_string(s.at("points").get<size_t>()) +
         " dimension=" + std::to_string(s.at("dimension").get<size_t>());
}

std::string summarizeAnalyze(const json& report) {
  std::string out = spaceLine(report);
  const json& conds = report.at("result").at("conditions");
  for (const std::string& key : conditionOrder()) {
    const json& v = conds.at(key);
    out += "\n  " + key + ": " + v.at("status").get<std::string>() + "  (" +
           v.at("method").get<std::string>() + ")";
  }
  return out;
}

std::string summarizeBoundary(const json& report) {
  const json& b = report.at("result").at("boundary");
  std::string out = spaceLine(report) + "\n  boundary members:";
  for (const json& m : b.at("members")) out += " " + m.get<std::string>();
  out += b.at("complete").get<bool>() ? "\n  classification complete"
                                      : "\n  classification has Unknown points";
  return out;
}

std::string summarizeDirichlet(const json& report) {
  const json& suite = report.at("result").at("suite");
  std::string out = spaceLine(report) + "\n  dilation property suite: ";
  out += suite.at("pass").get<bool>() ? "pass" : "FAIL";
  for (const json& c : suite.at("checks")) {
    out += "\n  " + c.at("name").get<std::string>() + ": ";
    out += c.at("pass").get<bool>() ? "pass" : "FAIL";
    if (c.contains("detail"))
      out += " (" + c.at("detail").get<std::string>() + ")";
  }
  return out;
}

std::string summarizeSuite(const json& report) {
  const json& r = report.at("result");
  std::string out =
      "spaces=" + std::to_string(r.at("spacesChecked").get<size_t>()) +
      " dilationSuites=" +
      std::to_string(r.at("dilationSuitesChecked").get<size_t>()) +
      " phaseTransfers=" +
      std::to_string(r.at("phaseTransfersChecked").get<size_t>()) +
      " shiftParameters=" +
      std::to_string(r.at("shiftParametersChecked").get<size_t>()) +
      " violations=" + std::to_string(r.at("violations").size());
  out += r.at("pass").get<bool>() ? "\nsuite: pass" : "\nsuite: FAIL";
  for (const json& v : r.at("violations"))
    out += "\n  " + v.at("kind").get<std::string>() + ": " +
           v.at("detail").get<std::string>() + " -> " +
           v.at("reproducer").get<std::string>();
  return out;
}

Scalar parseRational(const std::string& text) { return Scalar(ratFromString(text)); }

FunctionSpace buildExample(const std::string& name, size_t grid, size_t points,
                           size_t dim, size_t quillCount,
                           const std::string& alphaText,
                           const std::string& betaText,
                           const std::string& paramText, bool withConstants,
                           uint64_t seed, Field field) {
  if (name == "interval1") return makeIntervalSpace(1, grid, Scalar(), field);
  if (name == "interval2")
    return makeIntervalSpace(
        2, grid, paramText.empty() ? Scalar(Rat(-1)) : parseRational(paramText),
        field);
  if (name == "interval3")
    return makeIntervalSpace(
        3, grid, paramText.empty() ? Scalar(Rat(1, 2)) : parseRational(paramText),
        field);
  if (name == "band1" || name == "band2") {
    AnchoredBandParams p;
    p.variant = name == "band1" ? 1 : 2;
    p.grid = grid;
    if (!alphaText.empty()) p.alpha = parseRational(alphaText);
    if (!betaText.empty()) p.beta = parseRational(betaText);
    p.field = field;
    return makeAnchoredBand(p);
  }
  if (name == "porcupine") {
    std::vector<std::string> spine;
    for (size_t t = 0; t < points; ++t) spine.push_back(std::to_string(t));
    if (quillCount == 0 || quillCount > points)
      fail("BadParam", "--quills must be between 1 and --points");
    std::vector<std::string> quills(spine.begin(), spine.begin() + quillCount);
    return makePorcupine(spine, quills, field);
  }
  if (name == "square-affine") return makeSquareAffine();
  if (name == "two-point") return makeTwoPoint();
  if (name == "balanced-pair") return makeBalancedPairSpace(grid, field);
  if (name == "random") {
    RandomSpaceOptions opt;
    opt.forceConstants = withConstants;
    opt.field = field;
    return randomSpace(points, dim, seed, opt);
  }
  fail("BadParam", "unknown example \"" + name +
                       "\"; choose interval1, interval2, interval3, band1, "
                       "band2, porcupine, square-affine, two-point, "
                       "balanced-pair, or random");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of finite function spaces: Choquet boundary, "
               "representing measures, simpliciality conditions, and the "
               "dilation calculus"};
  app.require_subcommand(1);

  std::string fieldOverrideText;
  size_t phaseGrid = 64;
  uint64_t seed = 0;
  OutputSink sink;
  app.add_option("--field-override", fieldOverrideText,
                 "Force the scalar field when loading spaces")
      ->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--phase-grid", phaseGrid,
                 "Phase grid size for complex-mode enclosures (clamped to "
                 "[8, 1024])")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized searches")
      ->capture_default_str();
  app.add_option("--out", sink.outPath, "Write the resulting document here");
  app.add_flag("--json", sink.asJson, "Print the full document to stdout");

  std::string spacePath;
  CLI::App* cmdAnalyze =
      app.add_subcommand("analyze", "Full condition report for a space");
  cmdAnalyze->add_option("space", spacePath, "Space document")->required();
  CLI::App* cmdBoundary = app.add_subcommand(
      "boundary", "Choquet boundary, evaluation norms, and phase classes");
  cmdBoundary->add_option("space", spacePath, "Space document")->required();
  CLI::App* cmdDirichlet = app.add_subcommand(
      "dirichlet", "Dilation operators and their property suite");
  cmdDirichlet->add_option("space", spacePath, "Space document")->required();

  std::string exampleName;
  size_t grid = 0, points = 4, dim = 3, quillCount = 2;
  std::string alphaText, betaText, paramText;
  bool withConstants = false;
  CLI::App* cmdExample =
      app.add_subcommand("example", "Write a gallery space document");
  cmdExample->add_option("name", exampleName, "Example family")->required();
  cmdExample->add_option("--grid", grid, "Grid refinement (family dependent)");
  cmdExample->add_option("--points", points, "Point count (porcupine, random)")
      ->capture_default_str();
  cmdExample->add_option("--dim", dim, "Dimension (random)")
      ->capture_default_str();
  cmdExample->add_option("--quills", quillCount, "Doubled points (porcupine)")
      ->capture_default_str();
  cmdExample->add_option("--alpha", alphaText, "Anchor weight (band families)");
  cmdExample->add_option("--beta", betaText, "Anchor weight (band families)");
  cmdExample->add_option("--param", paramText,
                         "Endpoint coupling (interval2, interval3)");
  cmdExample->add_flag("--with-constants", withConstants,
                       "Force constants into a random space");

  size_t randomCount = 0, shiftSweep = 0;
  CLI::App* cmdSuite = app.add_subcommand(
      "suite", "Random-space law checks and the shift-bound sweep");
  cmdSuite->add_option("--random", randomCount, "Number of random spaces")
      ->capture_default_str();
  cmdSuite
      ->add_option("--shift-sweep", shiftSweep,
                   "Number of unimodular parameters for the shift bound")
      ->capture_default_str();

  std::string reportPath;
  CLI::App* cmdVerify =
      app.add_subcommand("verify", "Re-check every claim in a report");
  cmdVerify->add_option("report", reportPath, "Report document")->required();

  for (CLI::App* sub : {cmdAnalyze, cmdBoundary, cmdDirichlet, cmdExample,
                        cmdSuite, cmdVerify})
    sub->fallthrough(); // global flags may follow the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    std::optional<Field> fieldOverride;
    if (!fieldOverrideText.empty())
      fieldOverride = fieldFromName(fieldOverrideText);
    ReportOptions opt;
    opt.analysis.phaseGridN = phaseGrid;
    opt.analysis.seed = seed;
    opt.fieldOverride = fieldOverride;

    if (app.got_subcommand(cmdAnalyze)) {
      FunctionSpace s = loadSpaceFile(spacePath, fieldOverride);
      json report = analyzeReport(s, opt);
      sink.deliver(report, summarizeAnalyze(report));
      return 0;
    }
    if (app.got_subcommand(cmdBoundary)) {
      FunctionSpace s = loadSpaceFile(spacePath, fieldOverride);
      json report = boundaryReport(s, opt);
      sink.deliver(report, summarizeBoundary(report));
      return 0;
    }
    if (app.got_subcommand(cmdDirichlet)) {
      FunctionSpace s = loadSpaceFile(spacePath, fieldOverride);
      json report = dirichletReport(s, opt);
      sink.deliver(report, summarizeDirichlet(report));
      return report.at("result").at("suite").at("pass").get<bool>() ? 0 : 2;
    }
    if (app.got_subcommand(cmdExample)) {
      Field field = fieldOverride.value_or(Field::Real);
      if (grid == 0)
        grid = exampleName == "balanced-pair" ? 1
               : exampleName.rfind("band", 0) == 0 ? 2
                                                   : 8;
      FunctionSpace s =
          buildExample(exampleName, grid, points, dim, quillCount, alphaText,
                       betaText, paramText, withConstants, seed, field);
      json doc = saveSpace(s);
      if (sink.outPath.empty())
        std::cout << doc.dump(2) << "\n";
      else {
        writeJsonFile(sink.outPath, doc);
        if (sink.asJson)
          std::cout << doc.dump(2) << "\n";
        else
          std::cout << s.name << " -> " << sink.outPath << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(cmdSuite)) {
      SuiteParams p;
      p.randomCount = randomCount;
      p.shiftSweep = shiftSweep;
      p.seed = seed;
      p.phaseGridN = phaseGrid;
      if (!sink.outPath.empty()) {
        size_t slash = sink.outPath.find_last_of('/');
        p.reproducerDir = slash == std::string::npos
                              ? std::string(".")
                              : sink.outPath.substr(0, slash);
      }
      json report = suiteReport(p);
      sink.deliver(report, summarizeSuite(report));
      return report.at("result").at("pass").get<bool>() ? 0 : 2;
    }
    if (app.got_subcommand(cmdVerify)) {
      json report = readJsonFile(reportPath);
      verifyReport(report);
      std::string digest = report.contains("space")
                               ? report.at("space").at("digest").get<std::string>()
                               : std::string("-");
      std::cout << "report verifies: " << report.at("command").get<std::string>()
                << " (space " << digest << ")\n";
      return 0;
    }
    emitError("BadParam", "no subcommand selected");
    return 1;
  } catch (const Error& e) {
    emitError(e.code(), e.what());
    return exitCodeFor(e);
  } catch (const std::exception& e) {
    emitError("Unhandled", e.what());
    return 1;
  }
}
