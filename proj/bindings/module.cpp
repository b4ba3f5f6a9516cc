#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcorner/corner.hpp"
#include "lcorner/errors.hpp"
#include "lcorner/problem.hpp"
#include "lcorner/test_problems.hpp"
#include "lcorner/trace.hpp"

#include <sstream>

namespace py = pybind11;

using lcorner::CornerResult;
using lcorner::CornerSearchConfig;
using lcorner::IterationRecord;
using lcorner::LCurvePoint;
using lcorner::ParameterScale;
using lcorner::RegularizedProblem;
using lcorner::SearchBranch;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Tikhonov regularization with automatic selection of the penalty "
      "weight at the L-curve corner";

  py::register_exception<lcorner::Error>(m, "Error", PyExc_RuntimeError);

  py::class_<lcorner::TikhonovSolution>(m, "TikhonovSolution")
      .def_readonly("lambda_", &lcorner::TikhonovSolution::lambda)
      .def_readonly("x", &lcorner::TikhonovSolution::x)
      .def_readonly("residual_sq", &lcorner::TikhonovSolution::residual_sq)
      .def_readonly("norm_sq", &lcorner::TikhonovSolution::norm_sq)
      .def("__repr__", [](const lcorner::TikhonovSolution& s) {
        std::ostringstream out;
        out << "TikhonovSolution(lambda=" << s.lambda
            << ", residual_sq=" << s.residual_sq << ", norm_sq=" << s.norm_sq
            << ")";
        return out.str();
      });

  py::class_<LCurvePoint>(m, "LCurvePoint")
      .def(py::init<double, double, double>(), py::arg("lambda_"),
           py::arg("xi"), py::arg("eta"))
      .def_readwrite("lambda_", &LCurvePoint::lambda)
      .def_readwrite("xi", &LCurvePoint::xi)
      .def_readwrite("eta", &LCurvePoint::eta)
      .def(py::self == py::self)
      .def("__repr__", [](const LCurvePoint& p) {
        std::ostringstream out;
        out << "LCurvePoint(lambda=" << p.lambda << ", xi=" << p.xi
            << ", eta=" << p.eta << ")";
        return out.str();
      });

  py::class_<RegularizedProblem>(m, "RegularizedProblem")
      .def(py::init<lcorner::Matrix, lcorner::Vector>(),
           py::arg("operator_matrix"), py::arg("data"))
      .def_property_readonly("rows", &RegularizedProblem::rows)
      .def_property_readonly("cols", &RegularizedProblem::cols)
      .def_property_readonly("operator_matrix",
                             &RegularizedProblem::operator_matrix,
                             py::return_value_policy::copy)
      .def_property_readonly("data", &RegularizedProblem::data,
                             py::return_value_policy::copy)
      .def_property_readonly("singular_values",
                             &RegularizedProblem::singular_values,
                             py::return_value_policy::copy)
      .def("solve", &RegularizedProblem::solve, py::arg("lambda_"))
      .def("l_curve_point", &RegularizedProblem::l_curve_point,
           py::arg("lambda_"))
      .def("l_curve_sample", &RegularizedProblem::l_curve_sample,
           py::arg("grid"));

  m.def("build_problem", &lcorner::build_problem, py::arg("operator_matrix"),
        py::arg("data"));
  m.def("tikhonov_solve", &lcorner::tikhonov_solve, py::arg("problem"),
        py::arg("lambda_"));

  m.def(
      "menger_curvature",
      [](const LCurvePoint& pj, const LCurvePoint& pk, const LCurvePoint& pl) {
        return lcorner::menger_curvature(pj, pk, pl).value;
      },
      py::arg("pj"), py::arg("pk"), py::arg("pl"),
      "Signed curvature of the circumcircle through three (xi, eta) points; "
      "positive for counterclockwise triples");

  py::enum_<ParameterScale>(m, "ParameterScale")
      .value("linear", ParameterScale::linear)
      .value("log", ParameterScale::log);

  py::enum_<SearchBranch>(m, "SearchBranch")
      .value("shrink_negative_c3", SearchBranch::shrink_negative_c3)
      .value("move_left", SearchBranch::move_left)
      .value("move_right", SearchBranch::move_right);

  m.def("golden_section_init", &lcorner::golden_section_init,
        py::arg("lambda_lo"), py::arg("lambda_hi"),
        py::arg("scale") = ParameterScale::linear);

  py::class_<CornerSearchConfig>(m, "CornerSearchConfig")
      .def(py::init<>())
      .def_readwrite("lambda_lo", &CornerSearchConfig::lambda_lo)
      .def_readwrite("lambda_hi", &CornerSearchConfig::lambda_hi)
      .def_readwrite("epsilon", &CornerSearchConfig::epsilon)
      .def_readwrite("scale", &CornerSearchConfig::scale)
      .def_readwrite("max_iterations", &CornerSearchConfig::max_iterations)
      .def("validate", &CornerSearchConfig::validate)
      .def(py::self == py::self);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("index", &IterationRecord::index)
      .def_readonly("lambdas", &IterationRecord::lambdas)
      .def_readonly("c2", &IterationRecord::c2)
      .def_readonly("c3", &IterationRecord::c3)
      .def_readonly("branch", &IterationRecord::branch)
      .def_readonly("new_point", &IterationRecord::new_point)
      .def(py::self == py::self);

  py::class_<CornerResult>(m, "CornerResult")
      .def_readonly("lambda_opt", &CornerResult::lambda_opt)
      .def_readonly("corner_point", &CornerResult::corner_point)
      .def_readonly("trace", &CornerResult::trace)
      .def_readonly("evaluations", &CornerResult::evaluations)
      .def_readonly("points", &CornerResult::points)
      .def_readonly("window_at_lambda_lo", &CornerResult::window_at_lambda_lo)
      .def_readonly("window_at_lambda_hi", &CornerResult::window_at_lambda_hi)
      .def("__repr__", [](const CornerResult& r) {
        std::ostringstream out;
        out << "CornerResult(lambda_opt=" << r.lambda_opt << ", iterations="
            << r.trace.size() - 1 << ", evaluations=" << r.evaluations << ")";
        return out.str();
      });

  m.def(
      "corner_search",
      [](const RegularizedProblem& problem, const CornerSearchConfig& config) {
        return lcorner::corner_search(problem, config);
      },
      py::arg("problem"), py::arg("config") = CornerSearchConfig{},
      "Golden-section corner search on the problem's own L-curve");
  m.def(
      "corner_search_with_provider",
      [](const std::function<LCurvePoint(double)>& provider,
         const CornerSearchConfig& config) {
        return lcorner::corner_search(provider, config);
      },
      py::arg("provider"), py::arg("config") = CornerSearchConfig{},
      "Same search driven by an arbitrary lambda -> LCurvePoint callable");

  py::class_<lcorner::CurvatureSample>(m, "CurvatureSample")
      .def_readonly("lambda_", &lcorner::CurvatureSample::lambda)
      .def_readonly("curvature", &lcorner::CurvatureSample::curvature);

  py::class_<lcorner::DenseCornerResult>(m, "DenseCornerResult")
      .def_readonly("lambda_star", &lcorner::DenseCornerResult::lambda_star)
      .def_readonly("index_star", &lcorner::DenseCornerResult::index_star)
      .def_readonly("profile", &lcorner::DenseCornerResult::profile);

  m.def("dense_corner_oracle", &lcorner::dense_corner_oracle,
        py::arg("points"));

  py::class_<lcorner::SmoothingProblem>(m, "SmoothingProblem")
      .def_readonly("operator_matrix",
                    &lcorner::SmoothingProblem::operator_matrix)
      .def_readonly("x_true", &lcorner::SmoothingProblem::x_true);

  m.def("make_smoothing_problem", &lcorner::make_smoothing_problem,
        py::arg("n"), py::arg("kernel_width"));
  m.def("add_noise", &lcorner::add_noise, py::arg("b_clean"),
        py::arg("noise_level"), py::arg("seed"));

  py::class_<lcorner::TestProblem>(m, "TestProblem")
      .def_readonly("problem", &lcorner::TestProblem::problem)
      .def_readonly("x_true", &lcorner::TestProblem::x_true)
      .def_readonly("b_clean", &lcorner::TestProblem::b_clean)
      .def_readonly("noise_level", &lcorner::TestProblem::noise_level)
      .def_readonly("seed", &lcorner::TestProblem::seed);

  m.def("make_test_problem", &lcorner::make_test_problem, py::arg("n"),
        py::arg("kernel_width"), py::arg("noise_level"), py::arg("seed"));

  py::class_<lcorner::BatteryConfig>(m, "BatteryConfig")
      .def_readonly("n", &lcorner::BatteryConfig::n)
      .def_readonly("kernel_width", &lcorner::BatteryConfig::kernel_width)
      .def_readonly("noise_level", &lcorner::BatteryConfig::noise_level)
      .def_readonly("seed", &lcorner::BatteryConfig::seed);

  m.def("default_battery", &lcorner::default_battery);

  m.def(
      "serialize_trace",
      [](const CornerSearchConfig& config, const CornerResult& result) {
        return lcorner::TraceDocument::from_result(config, result).serialize();
      },
      py::arg("config"), py::arg("result"),
      "JSON trace document for a finished search");

  m.attr("GOLDEN_RATIO") = lcorner::kGoldenRatio;
}
