// Python bindings for the main operations: model construction, band theory,
// spectra, dynamics, and the analysis front end.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nhqw/analysis.hpp"
#include "nhqw/bandtheory.hpp"
#include "nhqw/config_io.hpp"
#include "nhqw/dynamics.hpp"
#include "nhqw/model.hpp"
#include "nhqw/spectra.hpp"
#include "nhqw/version.hpp"

namespace py = pybind11;
using namespace nhqw;

namespace {

Eigen::VectorXcd energies_to_vector(const std::vector<QuasiEnergy>& spec) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(spec.size()));
  for (std::size_t i = 0; i < spec.size(); ++i) out[i] = spec[i].value;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nonunitary quantum walks: GBZ band theory, spectra, dynamics, "
            "and non-Bloch exceptional points";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SingularityError>(m, "SingularityError",
                                           PyExc_ArithmeticError);
  py::register_exception<DegenerateDispersionError>(
      m, "DegenerateDispersionError", PyExc_ArithmeticError);
  py::register_exception<EpProximityError>(m, "EpProximityError",
                                           PyExc_ArithmeticError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError",
                                        PyExc_RuntimeError);
  py::register_exception<BracketingError>(m, "BracketingError",
                                          PyExc_RuntimeError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<CoinParams>(m, "CoinParams")
      .def(py::init<double, double>(), py::arg("theta1"), py::arg("theta2"),
           "Coin angles in radians; canonicalized to (-pi, pi]")
      .def_static("from_pi_units", &CoinParams::from_pi_units,
                  py::arg("theta1_pi"), py::arg("theta2_pi"))
      .def_readonly("theta1", &CoinParams::theta1)
      .def_readonly("theta2", &CoinParams::theta2)
      .def("__repr__", [](const CoinParams& c) {
        return "CoinParams(theta1=" + std::to_string(c.theta1) +
               ", theta2=" + std::to_string(c.theta2) + ")";
      });

  py::enum_<Boundary>(m, "Boundary")
      .value("Open", Boundary::Open)
      .value("Periodic", Boundary::Periodic);

  py::class_<WalkConfig>(m, "WalkConfig")
      .def(py::init<CoinParams, CoinParams, double, int, int, Boundary>(),
           py::arg("left"), py::arg("right"), py::arg("gamma"),
           py::arg("n_left"), py::arg("n_right"),
           py::arg("boundary") = Boundary::Open)
      .def_readonly("left", &WalkConfig::left)
      .def_readonly("right", &WalkConfig::right)
      .def_readonly("gamma", &WalkConfig::gamma)
      .def_readonly("n_left", &WalkConfig::n_left)
      .def_readonly("n_right", &WalkConfig::n_right)
      .def_readonly("boundary", &WalkConfig::boundary)
      .def_property_readonly("num_sites", &WalkConfig::num_sites)
      .def_property_readonly("dim", &WalkConfig::dim);

  py::enum_<StepVariant>(m, "StepVariant")
      .value("Balanced", StepVariant::Balanced)
      .value("Lossy", StepVariant::Lossy);

  py::class_<StepOperator>(m, "StepOperator")
      .def_readonly("matrix", &StepOperator::matrix)
      .def_readonly("variant", &StepOperator::variant)
      .def_readonly("gamma", &StepOperator::gamma);

  m.def("loss_fraction", &loss_fraction, py::arg("gamma"),
        "Loss probability p = 1 - exp(-4 gamma)");
  m.def("build_step_operator", &build_step_operator, py::arg("config"),
        py::arg("variant") = StepVariant::Balanced);
  m.def("balanced_from_lossy", &balanced_from_lossy, py::arg("op"),
        py::arg("gamma"));

  m.def("bloch_operator", &bloch_operator, py::arg("coin"), py::arg("gamma"),
        py::arg("beta"), "Analytic continuation U(beta) of the Bloch operator");
  m.def(
      "quasienergy_from_lambda",
      [](Complex lambda) { return quasienergy_from_lambda(lambda).value; },
      py::arg("lambda_"),
      "Branch-fixed quasienergy: Re E in (-pi, pi], Im E = ln|lambda|");
  m.def("gbz_radius", &gbz_radius, py::arg("theta2"), py::arg("gamma"));
  m.def("beta_roots", &beta_roots, py::arg("coin"), py::arg("gamma"),
        py::arg("lambda_"), "Roots of the beta quadratic, |b1| <= |b2|");
  m.def(
      "nonbloch_spectrum",
      [](const CoinParams& coin, double gamma, int num_points) {
        return energies_to_vector(nonbloch_spectrum(coin, gamma, num_points));
      },
      py::arg("coin"), py::arg("gamma"), py::arg("num_points") = 256,
      "Quasienergies over the GBZ circle (2*num_points entries)");
  m.def(
      "bloch_spectrum",
      [](const CoinParams& coin, double gamma, int num_k) {
        return energies_to_vector(bloch_spectrum(coin, gamma, num_k));
      },
      py::arg("coin"), py::arg("gamma"), py::arg("num_k") = 256,
      "Quasienergies over the Brillouin zone (2*num_k entries)");
  m.def("trace_deviation", &trace_deviation, py::arg("coin"), py::arg("gamma"),
        py::arg("gbz_angle"),
        "Tr[U^-1(beta) - U^dag(beta)] on the GBZ circle");

  py::class_<PtClassification> pt(m, "PtClassification");
  py::enum_<PtClassification::Phase>(pt, "Phase")
      .value("Exact", PtClassification::Phase::Exact)
      .value("Broken", PtClassification::Phase::Broken)
      .value("Boundary", PtClassification::Phase::Boundary);
  pt.def_readonly("phase", &PtClassification::phase)
      .def_readonly("margin", &PtClassification::margin);
  m.def("pt_classify", &pt_classify, py::arg("coin"), py::arg("gamma"));
  m.def("exceptional_theta2", &exceptional_theta2, py::arg("gamma"),
        "EP angle arccos(tanh gamma) in radians");

  py::class_<EtaMetric>(m, "EtaMetric")
      .def_readonly("eta", &EtaMetric::eta)
      .def_readonly("residual", &EtaMetric::residual)
      .def_readonly("positive_definite", &EtaMetric::positive_definite);
  m.def("eta_metric", &eta_metric, py::arg("coin"), py::arg("gamma"),
        py::arg("gbz_angle"));

  py::class_<EigenSystem>(m, "EigenSystem")
      .def_readonly("eigenvalues", &EigenSystem::eigenvalues)
      .def_readonly("right_vectors", &EigenSystem::right_vectors)
      .def_readonly("left_vectors", &EigenSystem::left_vectors)
      .def_readonly("residuals", &EigenSystem::residuals)
      .def_readonly("near_defective", &EigenSystem::near_defective);
  m.def("eigendecompose", &eigendecompose, py::arg("matrix"));
  m.def(
      "realspace_spectrum",
      [](const WalkConfig& config, int size_cap) {
        return energies_to_vector(realspace_spectrum(config, size_cap));
      },
      py::arg("config"), py::arg("size_cap") = kRealspaceSizeCap);

  py::class_<LocalizationReport>(m, "LocalizationReport")
      .def_readonly("weight_within", &LocalizationReport::weight_within)
      .def_readonly("ipr", &LocalizationReport::ipr)
      .def_readonly("eigenvalue_modulus",
                    &LocalizationReport::eigenvalue_modulus)
      .def_property_readonly("max_distance",
                             &LocalizationReport::max_distance);
  m.def("localization_report", &localization_report, py::arg("eig"),
        py::arg("config"));

  py::enum_<SpectrumMethod>(m, "SpectrumMethod")
      .value("Bloch", SpectrumMethod::Bloch)
      .value("Gbz", SpectrumMethod::Gbz)
      .value("RealspaceObc", SpectrumMethod::RealspaceObc);
  m.def("max_imag_quasienergy", &max_imag_quasienergy, py::arg("left"),
        py::arg("right"), py::arg("gamma"),
        py::arg("method") = SpectrumMethod::Gbz, py::arg("num_points") = 256,
        py::arg("sites_per_side") = 40);
  m.def("spectral_loop_area", &spectral_loop_area, py::arg("closed_curve"));
  m.def("trace_bands", &trace_bands, py::arg("pairs"));

  py::class_<SchemeSpec> scheme(m, "SchemeSpec");
  py::enum_<SchemeSpec::Scheme>(scheme, "Scheme")
      .value("DomainWall", SchemeSpec::Scheme::DomainWall)
      .value("Bulk", SchemeSpec::Scheme::Bulk);
  scheme
      .def(py::init([](SchemeSpec::Scheme s, int x0, int coin, int steps) {
             return SchemeSpec{s, x0, coin, steps};
           }),
           py::arg("scheme") = SchemeSpec::Scheme::DomainWall,
           py::arg("x0") = 6, py::arg("coin") = 0, py::arg("steps") = 7)
      .def_readwrite("scheme", &SchemeSpec::scheme)
      .def_readwrite("x0", &SchemeSpec::x0)
      .def_readwrite("coin", &SchemeSpec::coin)
      .def_readwrite("steps", &SchemeSpec::steps)
      .def_property_readonly("start_site", &SchemeSpec::start_site);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("steps", &Trajectory::steps)
      .def_readonly("gamma", &Trajectory::gamma)
      .def_readonly("n_left", &Trajectory::n_left)
      .def_readonly("survival", &Trajectory::survival)
      .def_readonly("loss_increment", &Trajectory::loss_increment)
      .def_readonly("cum_loss", &Trajectory::cum_loss)
      .def_readonly("final_state", &Trajectory::final_state)
      .def_readonly("site_prob", &Trajectory::site_prob);

  m.def("sized_for", &sized_for, py::arg("left"), py::arg("right"),
        py::arg("gamma"), py::arg("spec"),
        "Open lattice with steps + 2 margins around the start site");
  m.def("evolve", &evolve, py::arg("config"), py::arg("spec"));
  m.def("corrected_total", &corrected_total, py::arg("traj"), py::arg("gamma"));
  m.def("corrected_site", &corrected_site, py::arg("traj"), py::arg("gamma"),
        py::arg("x0"));

  py::class_<FitResult> fit(m, "FitResult");
  py::enum_<FitResult::Model>(fit, "Model")
      .value("Exponential", FitResult::Model::Exponential)
      .value("PowerLaw", FitResult::Model::PowerLaw);
  fit.def_readonly("model", &FitResult::model)
      .def_readonly("param", &FitResult::param)
      .def_readonly("amplitude", &FitResult::amplitude)
      .def_readonly("accumulated_variance", &FitResult::accumulated_variance)
      .def_readonly("t_lo", &FitResult::t_lo)
      .def_readonly("t_hi", &FitResult::t_hi)
      .def("evaluate", &FitResult::evaluate, py::arg("t"));
  m.def("fit_exponential", &fit_exponential, py::arg("series"),
        py::arg("t_lo"), py::arg("t_hi"));
  m.def("fit_power_law", &fit_power_law, py::arg("series"), py::arg("t_lo"),
        py::arg("t_hi"));
  m.def("accumulated_variance", &accumulated_variance, py::arg("series"),
        py::arg("fit"));

  py::class_<EpSearch>(m, "EpSearch")
      .def(py::init([](CoinParams left, double theta1_right, double gamma,
                       SchemeSpec::Scheme scheme, int steps, int x0) {
             return EpSearch{left, theta1_right, gamma, scheme, steps, x0};
           }),
           py::arg("left"), py::arg("theta1_right"), py::arg("gamma"),
           py::arg("scheme") = SchemeSpec::Scheme::DomainWall,
           py::arg("steps") = 7, py::arg("x0") = 6)
      .def_readwrite("left", &EpSearch::left)
      .def_readwrite("theta1_right", &EpSearch::theta1_right)
      .def_readwrite("gamma", &EpSearch::gamma)
      .def_readwrite("scheme", &EpSearch::scheme)
      .def_readwrite("steps", &EpSearch::steps)
      .def_readwrite("x0", &EpSearch::x0);

  py::class_<EpEstimate> ep(m, "EpEstimate");
  py::enum_<EpEstimate::Criterion>(ep, "Criterion")
      .value("ProbabilityUnity", EpEstimate::Criterion::ProbabilityUnity)
      .value("ZeroExponent", EpEstimate::Criterion::ZeroExponent)
      .value("SpectralZero", EpEstimate::Criterion::SpectralZero)
      .value("Analytic", EpEstimate::Criterion::Analytic);
  ep.def_readonly("theta2_star_pi", &EpEstimate::theta2_star_pi)
      .def_readonly("criterion", &EpEstimate::criterion)
      .def_readonly("lo_pi", &EpEstimate::lo_pi)
      .def_readonly("hi_pi", &EpEstimate::hi_pi);
  m.def("locate_ep", &locate_ep, py::arg("search"), py::arg("criterion"),
        py::arg("lo_pi"), py::arg("hi_pi"));

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("n_theta1", &GridSpec::n_theta1)
      .def_readwrite("n_theta2", &GridSpec::n_theta2)
      .def_readwrite("theta1_min_pi", &GridSpec::theta1_min_pi)
      .def_readwrite("theta1_max_pi", &GridSpec::theta1_max_pi)
      .def_readwrite("theta2_min_pi", &GridSpec::theta2_min_pi)
      .def_readwrite("theta2_max_pi", &GridSpec::theta2_max_pi);
  py::class_<PhaseDiagram>(m, "PhaseDiagram")
      .def_readonly("theta1_pi", &PhaseDiagram::theta1_pi)
      .def_readonly("theta2_pi", &PhaseDiagram::theta2_pi)
      .def_readonly("max_im_energy", &PhaseDiagram::max_im_energy)
      .def_readonly("method", &PhaseDiagram::method);
  m.def("phase_diagram", &phase_diagram, py::arg("gamma"), py::arg("left"),
        py::arg("grid"), py::arg("method") = SpectrumMethod::Gbz,
        py::arg("threads") = 1);

  m.def("walk_config_from_json", &walk_config_from_json, py::arg("text"));
  m.def("walk_config_to_json", &walk_config_to_json, py::arg("config"));
  m.def("preset_names", &preset_names);
  m.def("preset_config", &preset_config, py::arg("name"));
}
