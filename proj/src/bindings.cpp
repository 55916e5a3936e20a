#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbrsma/analysis.hpp"
#include "sbrsma/config.hpp"
#include "sbrsma/montecarlo.hpp"

namespace py = pybind11;
using namespace sbrsma;

namespace {

py::dict estimate_to_dict(const SopEstimate& e) {
  py::dict d;
  d["sop"] = e.value;
  d["trials"] = e.trials;
  d["std_error"] = e.std_error;
  d["ci95"] = py::make_tuple(e.ci_lo, e.ci_hi);
  d["rejected_blocks"] = e.rejected_blocks;
  return d;
}

McOptions make_opts(const std::string& ccs_mode, int workers) {
  McOptions o;
  if (ccs_mode == "magnitude_sum")
    o.ccs_mode = CcsMode::MagnitudeSum;
  else if (ccs_mode == "sum_squared")
    o.ccs_mode = CcsMode::SumSquared;
  else if (ccs_mode == "norm_squared")
    o.ccs_mode = CcsMode::NormSquared;
  else
    throw std::invalid_argument("ccs_mode must be magnitude_sum|sum_squared|norm_squared");
  o.workers = workers;
  return o;
}

XiPath path_from_string(const std::string& p) {
  if (p == "quadrature") return XiPath::Quadrature;
  if (p == "foxh") return XiPath::FoxH;
  throw std::invalid_argument("path must be quadrature|foxh");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symbiotic backscatter RSMA outage laboratory (native core)";

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("antennas", &ScenarioConfig::antennas)
      .def_readwrite("eta", &ScenarioConfig::eta)
      .def_readwrite("psi", &ScenarioConfig::psi)
      .def_property("psi_db", &ScenarioConfig::psi_db, &ScenarioConfig::set_psi_db)
      .def("validate", &ScenarioConfig::validate)
      .def("to_json", [](const ScenarioConfig& c) { return config_to_json_text(c); })
      .def("__repr__", [](const ScenarioConfig& c) {
        return "ScenarioConfig(" + config_to_json_text(c) + ")";
      });

  m.def("config_from_json", &config_from_json_text, py::arg("text") = "",
        "Scenario from a JSON string; empty text gives the stock parameters.");
  m.def("load_config", &load_config, py::arg("path"));

  m.def("exp_pdf", &exp_pdf, py::arg("z"), py::arg("omega"));
  m.def("upper_gamma_int", &upper_gamma_int, py::arg("shape"), py::arg("x"));
  m.def("tau_ccdf", &tau_ccdf, py::arg("z"), py::arg("shape"), py::arg("rate"));

  m.def(
      "delta_range",
      [](double tau_1, double tau_2, double theta_sq, double g1_sq, double g2_sq,
         const ScenarioConfig& cfg) {
        const DeltaInterval iv = delta_range(tau_1, tau_2, theta_sq, g1_sq, g2_sq, cfg.split,
                                             cfg.rates, cfg.eta, cfg.psi);
        return py::make_tuple(iv.feasible, iv.lo, iv.hi);
      },
      py::arg("tau_1"), py::arg("tau_2"), py::arg("theta_sq"), py::arg("g1_sq"),
      py::arg("g2_sq"), py::arg("cfg"),
      "(feasible, lo, hi) admissible reflection-coefficient interval");

  m.def(
      "simplified_sinrs",
      [](double tau_k, double theta_sq, double g_abs_sq, const ScenarioConfig& cfg,
         double delta, int user) {
        BackscatterParams bp;
        bp.eta = cfg.eta;
        bp.delta = delta;
        bp.psi = cfg.psi;
        const SinrTriple s = simplified_sinrs(tau_k, theta_sq, g_abs_sq, cfg.split, bp, user);
        return py::make_tuple(s.gamma_c, s.gamma_k, s.gamma_b);
      },
      py::arg("tau_k"), py::arg("theta_sq"), py::arg("g_abs_sq"), py::arg("cfg"),
      py::arg("delta"), py::arg("user"));

  m.def(
      "theorem_constants",
      [](const ScenarioConfig& cfg, int user) {
        const TheoremConstants c = theorem_constants(cfg, user);
        py::dict d;
        d["beta0"] = c.beta0;
        d["beta_k"] = c.beta_k;
        d["beta_jk"] = c.beta_jk;
        d["chi_k"] = c.chi_k;
        d["pi_k"] = c.pi_k;
        d["rho_ck"] = c.rho_ck;
        d["rho_k"] = c.rho_k;
        return d;
      },
      py::arg("cfg"), py::arg("user"));

  m.def(
      "xi_quadrature",
      [](int m_, int n, int q, double beta0, double beta_k, double beta_jk) {
        return xi_quadrature(m_, n, q, beta0, beta_k, beta_jk);
      },
      py::arg("m"), py::arg("n"), py::arg("q"), py::arg("beta0"), py::arg("beta_k"),
      py::arg("beta_jk"));
  m.def(
      "xi_foxh",
      [](int m_, int n, int q, double beta0, double beta_k, double beta_jk) {
        return xi_foxh(m_, n, q, beta0, beta_k, beta_jk);
      },
      py::arg("m"), py::arg("n"), py::arg("q"), py::arg("beta0"), py::arg("beta_k"),
      py::arg("beta_jk"));

  m.def(
      "foxh_uni",
      [](const std::vector<std::pair<double, double>>& upper,
         const std::vector<std::pair<double, double>>& lower, int m_, int n, double z) {
        FoxHSpec spec;
        spec.upper = upper;
        spec.lower = lower;
        spec.m = m_;
        spec.n = n;
        const FoxHResult r = foxh_uni(spec, z);
        return py::make_tuple(r.value, r.rel_err);
      },
      py::arg("upper"), py::arg("lower"), py::arg("m"), py::arg("n"), py::arg("z"),
      "Mellin-Barnes evaluation of H^{m,n}_{p,q}; returns (value, rel_err)");

  m.def(
      "sop_closed_form",
      [](const ScenarioConfig& cfg, const std::string& path) {
        return sop_closed_form(cfg, path_from_string(path));
      },
      py::arg("cfg"), py::arg("path") = "quadrature");

  m.def(
      "estimate_sop",
      [](const ScenarioConfig& cfg, const std::string& strategy, std::uint64_t trials,
         std::uint64_t seed, const std::string& ccs_mode, int workers) {
        return estimate_to_dict(estimate_sop(cfg, gc_strategy_from_string(strategy), trials,
                                             seed, make_opts(ccs_mode, workers)));
      },
      py::arg("cfg"), py::arg("strategy"), py::arg("trials"), py::arg("seed") = 1,
      py::arg("ccs_mode") = "magnitude_sum", py::arg("workers") = 0);

  m.def(
      "estimate_fixed_delta_sop",
      [](const ScenarioConfig& cfg, const std::string& strategy, double delta,
         std::uint64_t trials, std::uint64_t seed, const std::string& ccs_mode, int workers) {
        return estimate_to_dict(estimate_fixed_delta_sop(cfg, gc_strategy_from_string(strategy),
                                                         delta, trials, seed,
                                                         make_opts(ccs_mode, workers)));
      },
      py::arg("cfg"), py::arg("strategy"), py::arg("delta"), py::arg("trials"),
      py::arg("seed") = 1, py::arg("ccs_mode") = "magnitude_sum", py::arg("workers") = 0);

#ifdef SBRSMA_VERSION
  m.attr("__version__") = SBRSMA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
