// Python bindings: a thin JSON-string facade over the core library. Spaces
// and reports travel as serialized documents, so the Python side needs no
// mirrored type hierarchy; the package wrapper turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "choquet/boundary.hpp"
#include "choquet/error.hpp"
#include "choquet/gallery.hpp"
#include "choquet/io.hpp"
#include "choquet/report.hpp"
#include "choquet/representation.hpp"

namespace py = pybind11;
using namespace choquet;

namespace {

FunctionSpace spaceFrom(const std::string& doc) {
  return loadSpace(json::parse(doc));
}

ReportOptions optionsFrom(size_t phaseGrid, uint64_t seed, const std::string& field) {
  ReportOptions opt;
  opt.analysis.phaseGridN = phaseGrid;
  opt.analysis.seed = seed;
  if (!field.empty()) opt.fieldOverride = fieldFromName(field);
  return opt;
}

// Translate library errors into Python exceptions carrying the error code.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw py::value_error(e.code() + ": " + e.what());
  }
}

} // namespace

PYBIND11_MODULE(_choquetlab, m) {
  m.doc() = "Exact Choquet-theory computations on finite function spaces";

  m.def("tool_version", [] { return std::string(kToolVersion); });
  m.def("schema_version", [] { return std::string(kSchemaVersion); });

  // gallery constructors, each returning a space document (JSON string)
  m.def(
      "interval_space",
      [](int variant, size_t grid, const std::string& param, const std::string& field) {
        return guarded([&] {
          Scalar p = param.empty() ? Scalar() : scalarFromJson(json::parse(param));
          return saveSpace(makeIntervalSpace(variant, grid, p, fieldFromName(field))).dump();
        });
      },
      py::arg("variant"), py::arg("grid"), py::arg("param") = "",
      py::arg("field") = "real");
  m.def(
      "anchored_band",
      [](const std::string& alpha, const std::string& beta, size_t grid, int variant,
         const std::string& field) {
        return guarded([&] {
          AnchoredBandParams p;
          p.alpha = scalarFromJson(json::parse(alpha));
          p.beta = scalarFromJson(json::parse(beta));
          p.grid = grid;
          p.variant = variant;
          p.field = fieldFromName(field);
          return saveSpace(makeAnchoredBand(p)).dump();
        });
      },
      py::arg("alpha") = "\"1/4\"", py::arg("beta") = "\"1/2\"", py::arg("grid") = 2,
      py::arg("variant") = 1, py::arg("field") = "real");
  m.def(
      "porcupine",
      [](const std::vector<std::string>& spine, const std::vector<std::string>& quills,
         const std::string& field) {
        return guarded(
            [&] { return saveSpace(makePorcupine(spine, quills, fieldFromName(field))).dump(); });
      },
      py::arg("spine"), py::arg("quills"), py::arg("field") = "real");
  m.def("two_point", [](const std::string& field) {
    return guarded([&] { return saveSpace(makeTwoPoint(fieldFromName(field))).dump(); });
  }, py::arg("field") = "real");
  m.def("square_affine", [](const std::string& field) {
    return guarded([&] { return saveSpace(makeSquareAffine(fieldFromName(field))).dump(); });
  }, py::arg("field") = "real");
  m.def(
      "balanced_pair",
      [](size_t grid, const std::string& field) {
        return guarded(
            [&] { return saveSpace(makeBalancedPairSpace(grid, fieldFromName(field))).dump(); });
      },
      py::arg("grid") = 1, py::arg("field") = "real");
  m.def(
      "random_space",
      [](size_t n, size_t m, uint64_t seed, bool forceConstants, const std::string& field) {
        return guarded([&] {
          RandomSpaceOptions opt;
          opt.forceConstants = forceConstants;
          opt.field = fieldFromName(field);
          return saveSpace(randomSpace(n, m, seed, opt)).dump();
        });
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("force_constants") = false,
      py::arg("field") = "real");

  // full reports (JSON strings, same documents the CLI emits)
  m.def(
      "analyze",
      [](const std::string& space, size_t phaseGrid, uint64_t seed, const std::string& field) {
        return guarded([&] {
          return analyzeReport(spaceFrom(space), optionsFrom(phaseGrid, seed, field)).dump();
        });
      },
      py::arg("space"), py::arg("phase_grid") = 64, py::arg("seed") = 0,
      py::arg("field_override") = "");
  m.def(
      "boundary",
      [](const std::string& space, size_t phaseGrid, uint64_t seed, const std::string& field) {
        return guarded([&] {
          return boundaryReport(spaceFrom(space), optionsFrom(phaseGrid, seed, field)).dump();
        });
      },
      py::arg("space"), py::arg("phase_grid") = 64, py::arg("seed") = 0,
      py::arg("field_override") = "");
  m.def(
      "dirichlet",
      [](const std::string& space, size_t phaseGrid, uint64_t seed, const std::string& field) {
        return guarded([&] {
          return dirichletReport(spaceFrom(space), optionsFrom(phaseGrid, seed, field)).dump();
        });
      },
      py::arg("space"), py::arg("phase_grid") = 64, py::arg("seed") = 0,
      py::arg("field_override") = "");
  m.def("verify_report", [](const std::string& report) {
    guarded([&] { verifyReport(json::parse(report)); return 0; });
  });

  // direct condition and norm queries
  m.def("condition_statuses", [](const std::string& space) {
    return guarded([&] {
      ConditionReport cr = conditionReport(spaceFrom(space));
      std::map<std::string, std::string> out;
      for (const auto& [key, verdict] : cr.conditions) out[key] = statusName(verdict.status);
      return out;
    });
  });
  m.def("boundary_members", [](const std::string& space) {
    return guarded([&] { return choquetBoundary(spaceFrom(space)).members; });
  });
  m.def(
      "dual_norm_at",
      [](const std::string& space, const std::string& label, size_t phaseGrid) {
        return guarded([&] {
          FunctionSpace s = spaceFrom(space);
          AnalysisOptions opt;
          opt.phaseGridN = phaseGrid;
          NormValue nv = dualNorm(s, evaluationFunctional(s, s.K.index(label)), opt);
          return normValueToJson(nv).dump();
        });
      },
      py::arg("space"), py::arg("label"), py::arg("phase_grid") = 64);
}
