#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gwnoise/interferometer.hpp"
#include "gwnoise/noise.hpp"
#include "gwnoise/states.hpp"
#include "gwnoise/verify.hpp"

namespace py = pybind11;
using namespace gwnoise;

PYBIND11_MODULE(_gwnoise, m) {
  m.doc() = "Quantum-noise budgets of an interferometric position measurement";

  py::class_<DetectorConfig>(m, "DetectorConfig")
      .def(py::init<double, double, double, double>(), py::arg("mirror_mass_kg"),
           py::arg("arm_length_m"), py::arg("finesse"), py::arg("wavelength_m"))
      .def_readonly("mirror_mass", &DetectorConfig::mirror_mass)
      .def_readonly("arm_length", &DetectorConfig::arm_length)
      .def_readonly("finesse", &DetectorConfig::finesse)
      .def_readonly("wavelength", &DetectorConfig::wavelength)
      .def("omega", &DetectorConfig::omega)
      .def("tau", &DetectorConfig::tau)
      .def("bounces", &DetectorConfig::bounces)
      .def("a_pc", &DetectorConfig::a_pc)
      .def("a_rp", &DetectorConfig::a_rp)
      .def("power_of_nbar", &DetectorConfig::power_of_nbar)
      .def("nbar_of_power", &DetectorConfig::nbar_of_power)
      .def_static("preset", &DetectorConfig::preset, py::arg("name"));

  py::class_<MomentSet>(m, "MomentSet")
      .def_readonly("mean_jx", &MomentSet::mean_jx)
      .def_readonly("mean_jy", &MomentSet::mean_jy)
      .def_readonly("mean_jz", &MomentSet::mean_jz)
      .def_readonly("var_jx", &MomentSet::var_jx)
      .def_readonly("var_jy", &MomentSet::var_jy)
      .def_readonly("var_jz", &MomentSet::var_jz)
      .def_readonly("cov_jy_jz", &MomentSet::cov_jy_jz)
      .def_readonly("nbar", &MomentSet::nbar)
      .def_readonly("nbar1", &MomentSet::nbar1)
      .def_readonly("nbar2", &MomentSet::nbar2);

  py::class_<NoiseBudget>(m, "NoiseBudget")
      .def_readonly("dz_pc", &NoiseBudget::dz_pc)
      .def_readonly("dz_rp", &NoiseBudget::dz_rp)
      .def_readonly("nbar", &NoiseBudget::nbar)
      .def_readonly("power", &NoiseBudget::power)
      .def_readonly("flag", &NoiseBudget::flag)
      .def("dz_total", &NoiseBudget::dz_total);

  py::class_<Optimum>(m, "Optimum")
      .def_readonly("nbar_opt", &Optimum::nbar_opt)
      .def_readonly("power_opt", &Optimum::power_opt)
      .def_readonly("dz_opt", &Optimum::dz_opt);

  py::class_<LossCheck>(m, "LossCheck")
      .def_readonly("ok", &LossCheck::ok)
      .def_readonly("nbar_gamma", &LossCheck::nbar_gamma)
      .def_readonly("nbar_out", &LossCheck::nbar_out);

  py::class_<IrrepLabel>(m, "IrrepLabel")
      .def(py::init<int>(), py::arg("twice_j"))
      .def_readonly("twice_j", &IrrepLabel::twice_j)
      .def("j", &IrrepLabel::j)
      .def("dim", &IrrepLabel::dim)
      .def_static("from_j", &IrrepLabel::from_j, py::arg("j"));

  py::class_<TwoModeState>(m, "TwoModeState");

  py::class_<IntelligentStateSolution>(m, "IntelligentStateSolution")
      .def_readonly("eigenvalue", &IntelligentStateSolution::eigenvalue)
      .def_readonly("state", &IntelligentStateSolution::state)
      .def_readonly("eta", &IntelligentStateSolution::eta)
      .def_readonly("twice_m0", &IntelligentStateSolution::twice_m0);

  py::enum_<ObservableKind>(m, "ObservableKind")
      .value("PhotonDifference", ObservableKind::PhotonDifference)
      .value("SquaredDifference", ObservableKind::SquaredDifference);

  py::enum_<SqueezedMode>(m, "SqueezedMode")
      .value("Exact", SqueezedMode::Exact)
      .value("Asymptotic", SqueezedMode::Asymptotic);

  m.def("sql", &sql, py::arg("config"));
  m.def("budget_coherent", &budget_coherent, py::arg("nbar"), py::arg("config"));
  m.def("budget_squeezed", &budget_squeezed, py::arg("alpha"), py::arg("r"), py::arg("config"),
        py::arg("mode") = SqueezedMode::Exact);
  m.def("budget_mismatch_quadrature", &budget_mismatch_quadrature, py::arg("nbar1"),
        py::arg("r"), py::arg("config"));
  m.def("budget_phase_insensitive_port", &budget_phase_insensitive_port, py::arg("nbar1"),
        py::arg("nbar2"), py::arg("config"));
  m.def("budget_heisenberg_limited", &budget_heisenberg_limited, py::arg("nbar"),
        py::arg("config"));
  m.def("budget_intelligent_limit", &budget_intelligent_limit, py::arg("nbar"), py::arg("m0"),
        py::arg("config"));
  m.def("budget_from_moments", &budget_from_moments, py::arg("moments"), py::arg("config"));

  m.def("coherent_optimum", &coherent_optimum, py::arg("config"));
  m.def("squeezed_optimum", &squeezed_optimum, py::arg("r"), py::arg("config"));
  m.def("heisenberg_limited_optimum", &heisenberg_limited_optimum, py::arg("config"));
  m.def(
      "optimize_budget",
      [](const std::function<NoiseBudget(double)>& budget, const DetectorConfig& config,
         double nbar_min, double nbar_max) {
        return optimize_budget(budget, config, OptimizeBounds{nbar_min, nbar_max});
      },
      py::arg("budget"), py::arg("config"), py::arg("nbar_min") = 1.0,
      py::arg("nbar_max") = 1e26);

  m.def("loss_threshold_check", &loss_threshold_check, py::arg("nbar"), py::arg("gamma"));

  m.def("coherent_vacuum_moments", &coherent_vacuum_moments, py::arg("nbar"));
  m.def("coherent_squeezed_moments", &coherent_squeezed_moments, py::arg("alpha"), py::arg("r"));
  m.def("twin_fock_moments", &twin_fock_moments, py::arg("n"));
  m.def("twin_fock_state", &twin_fock_state, py::arg("n"));
  m.def("moments_of", &moments_of, py::arg("state"));
  m.def("solve_intelligent_state", &solve_intelligent_state, py::arg("label"), py::arg("eta"),
        py::arg("twice_m0"));
  m.def("intelligent_spectrum", &intelligent_spectrum, py::arg("label"), py::arg("eta"));
  m.def("intelligent_moments", &intelligent_moments, py::arg("solution"));
  m.def("intelligent_limit_4varjx", &intelligent_limit_4varjx, py::arg("j"), py::arg("m0"));

  m.def(
      "phase_uncertainty",
      [](const TwoModeState& state, ObservableKind kind, double phi) {
        return phase_uncertainty(state, kind, phi).value;
      },
      py::arg("state"), py::arg("kind"), py::arg("phi"));
  m.def(
      "phase_uncertainty_from_moments",
      [](const MomentSet& moments, double phi) { return phase_uncertainty(moments, phi).value; },
      py::arg("moments"), py::arg("phi"));
  m.def("schroedinger_evolve", &schroedinger_evolve, py::arg("state"), py::arg("phi"));
  m.def("phase_from_displacement", &phase_from_displacement, py::arg("z"), py::arg("config"));
  m.def("displacement_from_phase", &displacement_from_phase, py::arg("phi"), py::arg("config"));

  m.def(
      "run_verification",
      [](const std::string& level, std::uint64_t seed) {
        std::ostringstream out;
        const bool ok = run_verification(level == "full" ? VerifyLevel::Full : VerifyLevel::Quick,
                                         seed, out);
        return py::make_tuple(ok, out.str());
      },
      py::arg("level") = "quick", py::arg("seed") = 20240101);
}
