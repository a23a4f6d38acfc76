#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fubench/emissions.hpp"
#include "fubench/report.hpp"
#include "fubench/stats.hpp"
#include "fubench/store.hpp"

namespace py = pybind11;
using namespace fubench;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string compare_store(const std::filesystem::path& store_path, const std::string& baseline,
                          const std::string& variant, const std::string& format,
                          const std::vector<std::string>& units, const EmissionFactors& factors,
                          const std::vector<std::pair<double, double>>& projections) {
  const ResultsStore store(store_path);
  const StoreSeriesSource source(store);
  ReportSpec spec;
  spec.baseline = parse_endpoint(baseline);
  spec.variant = parse_endpoint(variant);
  for (const auto& u : units) spec.units.emplace_back(u);
  spec.factors = factors;
  for (const auto& [population, sessions] : projections) spec.projections.push_back({population, sessions});
  return render(build_report(spec, source), parse_format(format));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Functional-unit energy, traffic and CO2e benchmarking.";

  py::register_exception<MissingSeries>(m, "MissingSeries", PyExc_LookupError);
  py::register_exception<stats::InsufficientData>(m, "InsufficientData", PyExc_ValueError);

  py::class_<EmissionFactors>(m, "EmissionFactors")
      .def(py::init<>())
      .def_readwrite("grid_intensity", &EmissionFactors::grid_intensity)
      .def_readwrite("joule_to_kwh", &EmissionFactors::joule_to_kwh)
      .def_readwrite("transfer_intensity_base", &EmissionFactors::transfer_intensity_base)
      .def_readwrite("base_year", &EmissionFactors::base_year)
      .def_readwrite("halving_period_years", &EmissionFactors::halving_period_years)
      .def_readwrite("assessment_year", &EmissionFactors::assessment_year)
      .def_readwrite("device_embodied_total", &EmissionFactors::device_embodied_total)
      .def_readwrite("device_lifetime_seconds", &EmissionFactors::device_lifetime_seconds)
      .def_readwrite("resource_share", &EmissionFactors::resource_share)
      .def_readwrite("embodied_to_use_ratio", &EmissionFactors::embodied_to_use_ratio)
      .def("to_dict", [](const EmissionFactors& f) { return to_python(json(f)); })
      .def("__eq__", [](const EmissionFactors& a, const EmissionFactors& b) { return a == b; });

  py::class_<EmissionComponents>(m, "EmissionComponents")
      .def_readonly("use_user_g", &EmissionComponents::use_user_g)
      .def_readonly("use_network_g", &EmissionComponents::use_network_g)
      .def_readonly("embodied_user_g", &EmissionComponents::embodied_user_g)
      .def_readonly("embodied_network_g", &EmissionComponents::embodied_network_g)
      .def_readonly("total_g", &EmissionComponents::total_g)
      .def("to_dict", [](const EmissionComponents& c) { return to_python(json(c)); });

  py::class_<ScaleProjection>(m, "ScaleProjection")
      .def_readonly("population", &ScaleProjection::population)
      .def_readonly("sessions_per_year", &ScaleProjection::sessions_per_year)
      .def_readonly("per_session_saving_g", &ScaleProjection::per_session_saving_g)
      .def_readonly("annual_saving_t", &ScaleProjection::annual_saving_t)
      .def_readonly("flight_equivalents", &ScaleProjection::flight_equivalents);

  py::class_<TestVerdict>(m, "TestVerdict")
      .def_readonly("statistic", &TestVerdict::statistic)
      .def_readonly("p_value", &TestVerdict::p_value)
      .def_readonly("alpha", &TestVerdict::alpha)
      .def_readonly("significant", &TestVerdict::significant)
      .def_readonly("degenerate", &TestVerdict::degenerate);

  const EmissionFactors defaults;
  m.def("c_elec", &emissions::c_elec, py::arg("factors") = defaults, "gCO2e per joule");
  m.def("transfer_intensity", &emissions::transfer_intensity, py::arg("factors") = defaults, "ugCO2e per MB");
  m.def(
      "emission_breakdown",
      [](double energy_j, double data_mb, double duration_s, const EmissionFactors& f) {
        return emissions::emission_breakdown({energy_j, data_mb, duration_s}, f);
      },
      py::arg("energy_j"), py::arg("data_mb"), py::arg("duration_s"), py::arg("factors") = defaults);
  m.def("scale_projection", &scale_projection, py::arg("per_session_g"), py::arg("population"),
        py::arg("sessions_per_year"), py::arg("flight_rt_tonnes") = kFlightRoundTripTonnes);

  m.def(
      "quantile_type7",
      [](std::vector<double> v, double p) {
        if (v.empty()) throw py::value_error("empty sequence");
        std::sort(v.begin(), v.end());
        return stats::quantile_type7(v, p);
      },
      py::arg("values"), py::arg("p"));
  m.def(
      "iqr_filter",
      [](const std::vector<double>& v) {
        const auto r = stats::iqr_filter(v);
        return py::dict(py::arg("retained") = r.retained, py::arg("dropped") = r.dropped,
                        py::arg("low") = r.low, py::arg("high") = r.high, py::arg("passes") = r.passes);
      },
      py::arg("values"));
  m.def(
      "welch_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b, double alpha) {
        return stats::welch_t_test(a, b, alpha);
      },
      py::arg("a"), py::arg("b"), py::arg("alpha") = stats::kDefaultAlpha);
  m.def(
      "normality_check",
      [](const std::vector<double>& v, double alpha) { return stats::normality_check(v, alpha); },
      py::arg("values"), py::arg("alpha") = stats::kDefaultAlpha);

  m.def("condition_key", [](const std::string& key) { return parse_condition_key(key).key(); }, py::arg("key"),
        "Canonical form of a condition key");
  m.def("compare", &compare_store, py::arg("store"), py::arg("baseline"), py::arg("variant"),
        py::arg("format") = "json", py::arg("units") = std::vector<std::string>{}, py::arg("factors") = defaults,
        py::arg("projections") = std::vector<std::pair<double, double>>{},
        "Rendered comparison report between two stored series sets");
}
