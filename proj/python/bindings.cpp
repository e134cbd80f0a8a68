#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sssd/ait_sahalia.hpp"
#include "sssd/analysis.hpp"
#include "sssd/baselines.hpp"
#include "sssd/brownian.hpp"
#include "sssd/cir_quad.hpp"
#include "sssd/gen_ait_sahalia.hpp"
#include "sssd/params.hpp"
#include "sssd/rng.hpp"
#include "sssd/stage_flow.hpp"

namespace py = pybind11;
using namespace sssd;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Split-step semi-discrete schemes for boundary-preserving SDE "
              "integration";

    py::register_exception<validation_error>(m, "ValidationError",
                                             PyExc_ValueError);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def_readonly("horizon", &TimeGrid::horizon)
        .def_readonly("steps", &TimeGrid::steps)
        .def_readonly("delta", &TimeGrid::delta)
        .def("__repr__", [](const TimeGrid& g) {
            return "TimeGrid(T=" + std::to_string(g.horizon) +
                   ", n=" + std::to_string(g.steps) + ")";
        });
    m.def("make_grid", &make_grid, py::arg("horizon"), py::arg("steps"));

    py::class_<BrownianIncrements>(m, "BrownianIncrements")
        .def_readonly("grid", &BrownianIncrements::grid)
        .def_readonly("values", &BrownianIncrements::values);
    m.def("sample_increments", &sample_increments, py::arg("seed"),
          py::arg("path_index"), py::arg("grid"));
    m.def("coarsen_increments", &coarsen_increments, py::arg("fine"),
          py::arg("factor"));

    py::class_<PathEnsemble>(m, "PathEnsemble")
        .def_readonly("grid", &PathEnsemble::grid)
        .def_readonly("paths", &PathEnsemble::paths)
        .def("row", [](const PathEnsemble& e, std::uint64_t p) {
            auto r = e.row(p);
            return std::vector<double>(r.begin(), r.end());
        });

    py::class_<AitSahaliaParams>(m, "AitSahaliaParams")
        .def(py::init([](double a1, double a2, double a3, double a4, double sigma,
                         double r, double rho, double x0) {
                 return validate(AitSahaliaParams{a1, a2, a3, a4, sigma, r, rho, x0});
             }),
             py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"),
             py::arg("sigma"), py::arg("r"), py::arg("rho"), py::arg("x0"))
        .def_readonly("a1", &AitSahaliaParams::a1)
        .def_readonly("a2", &AitSahaliaParams::a2)
        .def_readonly("a3", &AitSahaliaParams::a3)
        .def_readonly("a4", &AitSahaliaParams::a4)
        .def_readonly("sigma", &AitSahaliaParams::sigma)
        .def_readonly("r", &AitSahaliaParams::r)
        .def_readonly("rho", &AitSahaliaParams::rho)
        .def_readonly("x0", &AitSahaliaParams::x0);

    py::class_<SplitConfig>(m, "SplitConfig")
        .def(py::init<>())
        .def(py::init([](double a) { return validate(SplitConfig{a}); }),
             py::arg("a"))
        .def_readonly("a", &SplitConfig::a)
        .def_static("default_split_parameter",
                    &SplitConfig::default_split_parameter);

    py::class_<GenAitSahaliaParams>(m, "GenAitSahaliaParams")
        .def(py::init([](const AitSahaliaParams& base, double b1, double b2,
                         double b3) {
                 return validate(GenAitSahaliaParams{base, b1, b2, b3});
             }),
             py::arg("base"), py::arg("b1"), py::arg("b2"), py::arg("b3"))
        .def_readonly("base", &GenAitSahaliaParams::base)
        .def_readonly("b1", &GenAitSahaliaParams::b1)
        .def_readonly("b2", &GenAitSahaliaParams::b2)
        .def_readonly("b3", &GenAitSahaliaParams::b3);

    py::class_<CirQuadParams>(m, "CirQuadParams")
        .def(py::init([](double k, double l, double d, double sigma, double x0) {
                 return validate(CirQuadParams{k, l, d, sigma, x0});
             }),
             py::arg("k"), py::arg("l"), py::arg("d"), py::arg("sigma"),
             py::arg("x0"))
        .def_readonly("k", &CirQuadParams::k)
        .def_readonly("l", &CirQuadParams::l)
        .def_readonly("d", &CirQuadParams::d)
        .def_readonly("sigma", &CirQuadParams::sigma)
        .def_readonly("x0", &CirQuadParams::x0);

    m.def("moment_bound_margin", &moment_bound_margin, py::arg("a"),
          py::arg("delta"), py::arg("p"));

    py::class_<ComposedScheme>(m, "ComposedScheme")
        .def_readonly("initial_state", &ComposedScheme::initial_state)
        .def_readonly("domain_lower_bound", &ComposedScheme::domain_lower_bound)
        .def_property_readonly("stage_names", [](const ComposedScheme& s) {
            std::vector<std::string> names;
            for (const auto& st : s.stages) names.push_back(st.name);
            return names;
        });
    m.def("step", &step, py::arg("scheme"), py::arg("state"), py::arg("delta"),
          py::arg("dw"));
    m.def("simulate_path", &simulate_path, py::arg("scheme"), py::arg("grid"),
          py::arg("increments"));

    m.def("transform_to_y", &transform_to_y, py::arg("x0"));
    m.def("to_x", &to_x, py::arg("y"));
    m.def("ait_sahalia_y_drift", &ait_sahalia_y_drift, py::arg("y"), py::arg("params"));
    m.def("ait_sahalia_split_drift", &ait_sahalia_split_drift, py::arg("state"),
          py::arg("frozen"), py::arg("params"), py::arg("cfg"));
    m.def("ait_sahalia_stage1", &ait_sahalia_stage1, py::arg("y_entry"),
          py::arg("a"), py::arg("a2"), py::arg("delta"));
    m.def("ait_sahalia_stage2", &ait_sahalia_stage2, py::arg("y_entry"),
          py::arg("y_frozen"), py::arg("params"), py::arg("delta"), py::arg("dw"));
    m.def("ait_sahalia_step", &ait_sahalia_step, py::arg("y_n"), py::arg("params"),
          py::arg("cfg"), py::arg("delta"), py::arg("dw"));
    m.def("make_ait_sahalia_scheme", &make_ait_sahalia_scheme, py::arg("params"),
          py::arg("cfg") = SplitConfig{});

    m.def("gen_ait_sahalia_y_drift", &gen_ait_sahalia_y_drift, py::arg("y"),
          py::arg("params"));
    m.def("gen_ait_sahalia_split_drift", &gen_ait_sahalia_split_drift,
          py::arg("state"), py::arg("frozen"), py::arg("params"));
    m.def("gen_ait_sahalia_step", &gen_ait_sahalia_step, py::arg("y_n"),
          py::arg("params"), py::arg("delta"), py::arg("dw"));
    m.def("make_gen_ait_sahalia_scheme", &make_gen_ait_sahalia_scheme,
          py::arg("params"));

    m.def("cir_quad_drift", &cir_quad_drift, py::arg("x"), py::arg("params"));
    m.def("cir_quad_split_drift", &cir_quad_split_drift, py::arg("state"),
          py::arg("frozen"), py::arg("params"));
    m.def("cir_quad_step", &cir_quad_step, py::arg("y_n"), py::arg("params"),
          py::arg("delta"), py::arg("dw"));
    m.def("make_cir_quad_scheme", &make_cir_quad_scheme, py::arg("params"));

    m.def("euler_maruyama_step", &euler_maruyama_step, py::arg("x_n"),
          py::arg("params"), py::arg("delta"), py::arg("dw"));
    m.def("drift_implicit_step", &drift_implicit_step, py::arg("x_n"),
          py::arg("params"), py::arg("delta"), py::arg("dw"));
    m.def("make_euler_maruyama_scheme", &make_euler_maruyama_scheme,
          py::arg("params"));
    m.def("make_drift_implicit_scheme", &make_drift_implicit_scheme,
          py::arg("params"));

    py::class_<ConvergenceLevel>(m, "ConvergenceLevel")
        .def_readonly("delta", &ConvergenceLevel::delta)
        .def_readonly("rms_error", &ConvergenceLevel::rms_error)
        .def_readonly("mean_abs_error", &ConvergenceLevel::mean_abs_error)
        .def_readonly("is_reference", &ConvergenceLevel::is_reference)
        .def_readonly("excluded_from_fit", &ConvergenceLevel::excluded_from_fit);
    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("levels", &ConvergenceReport::levels)
        .def_readonly("estimated_order", &ConvergenceReport::estimated_order)
        .def_readonly("regression_r2", &ConvergenceReport::regression_r2)
        .def_readonly("order_defined", &ConvergenceReport::order_defined)
        .def_readonly("paths", &ConvergenceReport::paths)
        .def_readonly("seed", &ConvergenceReport::seed)
        .def("to_json", [](const ConvergenceReport& r) { return to_json_string(r); })
        .def("to_csv", [](const ConvergenceReport& r) { return to_csv_string(r); });
    py::class_<MomentLevel>(m, "MomentLevel")
        .def_readonly("delta", &MomentLevel::delta)
        .def_readonly("empirical_moment", &MomentLevel::empirical_moment)
        .def_readonly("std_error", &MomentLevel::std_error);
    py::class_<MomentReport>(m, "MomentReport")
        .def_readonly("p", &MomentReport::p)
        .def_readonly("per_delta", &MomentReport::per_delta)
        .def_readonly("max_over_deltas", &MomentReport::max_over_deltas)
        .def("to_json", [](const MomentReport& r) { return to_json_string(r); })
        .def("to_csv", [](const MomentReport& r) { return to_csv_string(r); });
    py::class_<PositivityReport>(m, "PositivityReport")
        .def_readonly("paths", &PositivityReport::paths)
        .def_readonly("steps", &PositivityReport::steps)
        .def_readonly("min_state", &PositivityReport::min_state)
        .def_readonly("violations", &PositivityReport::violations)
        .def_readonly("strict", &PositivityReport::strict)
        .def("to_json", [](const PositivityReport& r) { return to_json_string(r); })
        .def("to_csv", [](const PositivityReport& r) { return to_csv_string(r); });
    py::class_<ContrastRow>(m, "ContrastRow")
        .def_readonly("scheme", &ContrastRow::scheme)
        .def_readonly("space", &ContrastRow::space)
        .def_readonly("violations", &ContrastRow::violations)
        .def_readonly("nonfinite", &ContrastRow::nonfinite)
        .def_readonly("min_state", &ContrastRow::min_state);
    py::class_<ContrastSummary>(m, "ContrastSummary")
        .def_readonly("delta", &ContrastSummary::delta)
        .def_readonly("paths", &ContrastSummary::paths)
        .def_readonly("seed", &ContrastSummary::seed)
        .def_readonly("rows", &ContrastSummary::rows)
        .def("to_json", [](const ContrastSummary& r) { return to_json_string(r); })
        .def("to_csv", [](const ContrastSummary& r) { return to_csv_string(r); });

    m.def("strong_error_study", &strong_error_study, py::arg("scheme"),
          py::arg("horizon"), py::arg("finest_n"), py::arg("levels"),
          py::arg("paths"), py::arg("seed"));
    m.def("moment_study", &moment_study, py::arg("scheme"), py::arg("p"),
          py::arg("deltas"), py::arg("horizon"), py::arg("paths"), py::arg("seed"));
    m.def("simulate_ensemble", &simulate_ensemble, py::arg("scheme"),
          py::arg("grid"), py::arg("paths"), py::arg("seed"));
    m.def("positivity_audit", &positivity_audit, py::arg("ensemble"),
          py::arg("strict"));
    m.def("baseline_contrast", &baseline_contrast, py::arg("params"),
          py::arg("cfg"), py::arg("horizon"), py::arg("delta"), py::arg("paths"),
          py::arg("seed"));
}
