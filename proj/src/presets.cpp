#include "sbrsma/presets.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "sbrsma/analysis.hpp"
#include "sbrsma/report.hpp"

namespace sbrsma {
namespace {

std::vector<double> linspace_db(double lo, double hi, double step) {
  std::vector<double> g;
  for (double x = lo; x <= hi + 1e-9; x += step) g.push_back(x);
  return g;
}

std::string out_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SweepRow make_row(const ScenarioConfig& cfg, const std::string& strategy,
                  const std::string& policy, std::uint64_t trials, std::uint64_t seed,
                  const SopEstimate& est) {
  SweepRow row;
  row.strategy = strategy;
  row.antennas = cfg.antennas;
  row.psi_db = cfg.psi_db();
  row.rc = cfg.rates.rc;
  row.r1 = cfg.rates.r1;
  row.r2 = cfg.rates.r2;
  row.rb = cfg.rates.rb;
  row.alpha_c = cfg.split.alpha_c;
  row.alpha_1 = cfg.split.alpha_1;
  row.alpha_2 = cfg.split.alpha_2;
  row.eta = cfg.eta;
  row.delta_policy = policy;
  row.trials = trials;
  row.seed = seed;
  row.est = est;
  return row;
}

Curve closed_form_curve(const ScenarioConfig& base, const std::vector<double>& grid,
                        const std::string& label) {
  Curve c;
  c.label = label;
  for (double db : grid) {
    ScenarioConfig cfg = base;
    cfg.set_psi_db(db);
    c.psi_db.push_back(db);
    c.sop.push_back(sop_closed_form(cfg));
  }
  return c;
}

PresetResult run_fig2(const ScenarioConfig& base, std::uint64_t trials, std::uint64_t seed,
                      const std::string& out_dir, const McOptions& opts) {
  const auto grid = linspace_db(0.0, 30.0, 2.5);
  const std::vector<GcStrategy> strategies = {GcStrategy::Rcs, GcStrategy::Scs,
                                              GcStrategy::Mcs, GcStrategy::Ccs};
  auto rows = sweep(base, strategies, SweepAxis::PsiDb, grid, trials, seed, opts);
  // Fixed-reflection benchmarks ride on the analyzed strategy.
  std::uint64_t salt = 1u << 20;
  for (double delta : {0.3, 0.8}) {
    char policy[32];
    std::snprintf(policy, sizeof policy, "fixed_%g", delta);
    for (double db : grid) {
      ScenarioConfig cfg = base;
      cfg.set_psi_db(db);
      const std::uint64_t s = derive_seed(seed, salt++);
      const SopEstimate est = estimate_fixed_delta_sop(cfg, GcStrategy::Ccs, delta, trials, s, opts);
      rows.push_back(make_row(cfg, "ccs", policy, trials, s, est));
    }
  }
  PresetResult res;
  const std::string csv = out_path(out_dir, "fig2_psi_sweep.csv");
  write_text_file(csv, rows_to_csv(rows));
  res.files.push_back(csv);
  auto curves = csv_to_curves(rows);
  curves.push_back(closed_form_curve(base, grid, "ccs closed-form"));
  const std::string svg = out_path(out_dir, "fig2_psi_sweep.svg");
  write_text_file(svg, curves_to_svg(curves, "Outage vs Psi, gain-control strategies"));
  res.files.push_back(svg);
  return res;
}

PresetResult run_fig3(const ScenarioConfig& base, std::uint64_t trials, std::uint64_t seed,
                      const std::string& out_dir, const McOptions& opts) {
  const auto grid = linspace_db(10.0, 45.0, 2.5);
  std::vector<SweepRow> rows;
  int salt = 0;
  for (int antennas : {3, 4, 5, 6}) {
    ScenarioConfig cfg = base;
    cfg.antennas = antennas;
    auto sub = sweep(cfg, {GcStrategy::Ccs}, SweepAxis::PsiDb, grid, trials,
                     derive_seed(seed, 7000 + salt++), opts);
    rows.insert(rows.end(), sub.begin(), sub.end());
  }
  PresetResult res;
  const std::string csv = out_path(out_dir, "fig3_antenna_sweep.csv");
  write_text_file(csv, rows_to_csv(rows));
  res.files.push_back(csv);
  auto curves = csv_to_curves(rows);
  for (int antennas : {3, 6}) {
    ScenarioConfig cfg = base;
    cfg.antennas = antennas;
    curves.push_back(closed_form_curve(cfg, grid, "L=" + std::to_string(antennas) + " closed-form"));
  }
  const std::string svg = out_path(out_dir, "fig3_antenna_sweep.svg");
  write_text_file(svg, curves_to_svg(curves, "Outage vs Psi, antenna count"));
  res.files.push_back(svg);
  return res;
}

PresetResult run_fig4(const ScenarioConfig& base, std::uint64_t trials, std::uint64_t seed,
                      const std::string& out_dir, const McOptions& opts) {
  const auto grid = linspace_db(0.0, 40.0, 2.5);
  std::vector<SweepRow> rows;
  int salt = 0;
  for (const auto& rc : fig4_rate_cases()) {
    ScenarioConfig cfg = base;
    cfg.rates = rc.rates;
    auto sub = sweep(cfg, {GcStrategy::Ccs}, SweepAxis::PsiDb, grid, trials,
                     derive_seed(seed, 9000 + salt++), opts);
    rows.insert(rows.end(), sub.begin(), sub.end());
  }
  PresetResult res;
  const std::string csv = out_path(out_dir, "fig4_rate_cases.csv");
  write_text_file(csv, rows_to_csv(rows));
  res.files.push_back(csv);
  const std::string svg = out_path(out_dir, "fig4_rate_cases.svg");
  write_text_file(svg, curves_to_svg(csv_to_curves(rows), "Outage vs Psi, rate-target cases"));
  res.files.push_back(svg);
  return res;
}

PresetResult run_validate_theorem1(const ScenarioConfig& base, std::uint64_t trials,
                                   std::uint64_t seed, const std::string& out_dir,
                                   const McOptions& opts) {
  const auto grid = linspace_db(0.0, 30.0, 5.0);
  McOptions mc_opts = opts;
  mc_opts.ccs_mode = CcsMode::MagnitudeSum;
  auto rows = sweep(base, {GcStrategy::Ccs}, SweepAxis::PsiDb, grid, trials, seed, mc_opts);

  PresetResult res;
  std::ostringstream table;
  table << "Psi_dB,mc_sop,mc_std_error,closed_form_sop,abs_diff,n_sigma,agree\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ScenarioConfig cfg = base;
    cfg.set_psi_db(grid[i]);
    const double cf = sop_closed_form(cfg);
    const double mc = rows[i].est.value;
    const double se = std::max(rows[i].est.std_error, 1e-300);
    const double diff = std::abs(cf - mc);
    const bool agree = diff <= 3.0 * se;
    res.ok = res.ok && agree;
    table << fmt(grid[i]) << ',' << fmt(mc) << ',' << fmt(rows[i].est.std_error) << ','
          << fmt(cf) << ',' << fmt(diff) << ',' << fmt(diff / se) << ','
          << (agree ? "yes" : "NO") << "\n";
  }
  const std::string csv = out_path(out_dir, "validate_theorem1.csv");
  write_text_file(csv, rows_to_csv(rows));
  res.files.push_back(csv);
  const std::string check = out_path(out_dir, "theorem1_check.csv");
  write_text_file(check, table.str());
  res.files.push_back(check);
  auto curves = csv_to_curves(rows);
  curves.push_back(closed_form_curve(base, grid, "ccs closed-form"));
  const std::string svg = out_path(out_dir, "validate_theorem1.svg");
  write_text_file(svg, curves_to_svg(curves, "Monte Carlo vs closed form"));
  res.files.push_back(svg);
  return res;
}

PresetResult run_validate_foxh(const std::string& out_dir) {
  PresetResult res;
  std::ostringstream table;
  table << "identity,z,m,value,reference,rel_err\n";
  double max_err = 0.0;

  FoxHSpec exp_spec;  // H^{1,0}_{0,1}[z | -; (0,1)] = exp(-z)
  exp_spec.lower = {{0.0, 1.0}};
  exp_spec.m = 1;
  FoxHSpec inv_exp_spec;  // H^{0,1}_{1,0}[z | (1,1); -] = exp(-1/z)
  inv_exp_spec.upper = {{1.0, 1.0}};
  inv_exp_spec.n = 1;

  auto record = [&](const char* name, double z, int m, double value, double reference) {
    const double err = std::abs(value - reference) / std::abs(reference);
    max_err = std::max(max_err, err);
    table << name << ',' << fmt(z) << ',' << m << ',' << fmt(value) << ',' << fmt(reference)
          << ',' << fmt(err) << "\n";
  };

  for (int i = 0; i <= 16; ++i) {
    const double z = std::pow(10.0, -2.0 + 4.0 * i / 16.0);
    record("exp(-z)", z, 0, foxh_uni(exp_spec, z).value, std::exp(-z));
    record("exp(-1/z)", z, 0, foxh_uni(inv_exp_spec, z).value, std::exp(-1.0 / z));
    for (int m = 1; m <= 5; ++m) {
      FoxHSpec pow_spec;  // Gamma(m)(1+z)^-m = H^{1,1}_{1,1}[z | (1-m,1); (0,1)]
      pow_spec.upper = {{1.0 - m, 1.0}};
      pow_spec.lower = {{0.0, 1.0}};
      pow_spec.m = 1;
      pow_spec.n = 1;
      const double v = foxh_uni(pow_spec, z).value / std::tgamma(static_cast<double>(m));
      record("(1+z)^-m", z, m, v, std::pow(1.0 + z, -m));
    }
  }
  table << "max_rel_err,,," << fmt(max_err) << ",,\n";
  res.ok = max_err < 1e-8;
  const std::string csv = out_path(out_dir, "validate_foxh.csv");
  write_text_file(csv, table.str());
  res.files.push_back(csv);
  return res;
}

}  // namespace

std::vector<RateCase> fig4_rate_cases() {
  return {
      {"case1", RateTargets(1.0, 1.5, 2.0, 0.5)},
      {"case2", RateTargets(0.75, 1.25, 1.75, 0.75)},
      {"case3", RateTargets(0.5, 1.0, 1.5, 1.5)},
  };
}

PresetName preset_from_string(const std::string& name) {
  if (name == "fig2_psi_sweep") return PresetName::Fig2PsiSweep;
  if (name == "fig3_antenna_sweep") return PresetName::Fig3AntennaSweep;
  if (name == "fig4_rate_cases") return PresetName::Fig4RateCases;
  if (name == "validate_theorem1") return PresetName::ValidateTheorem1;
  if (name == "validate_foxh") return PresetName::ValidateFoxh;
  throw std::invalid_argument("unknown preset: " + name);
}

const char* to_string(PresetName p) {
  switch (p) {
    case PresetName::Fig2PsiSweep: return "fig2_psi_sweep";
    case PresetName::Fig3AntennaSweep: return "fig3_antenna_sweep";
    case PresetName::Fig4RateCases: return "fig4_rate_cases";
    case PresetName::ValidateTheorem1: return "validate_theorem1";
    case PresetName::ValidateFoxh: return "validate_foxh";
  }
  return "?";
}

std::vector<std::string> preset_names() {
  return {"fig2_psi_sweep", "fig3_antenna_sweep", "fig4_rate_cases", "validate_theorem1",
          "validate_foxh"};
}

PresetResult run_preset(PresetName preset, const ScenarioConfig& cfg, std::uint64_t trials,
                        std::uint64_t seed, const std::string& out_dir, const McOptions& opts) {
  std::filesystem::create_directories(out_dir);
  switch (preset) {
    case PresetName::Fig2PsiSweep: return run_fig2(cfg, trials, seed, out_dir, opts);
    case PresetName::Fig3AntennaSweep: return run_fig3(cfg, trials, seed, out_dir, opts);
    case PresetName::Fig4RateCases: return run_fig4(cfg, trials, seed, out_dir, opts);
    case PresetName::ValidateTheorem1:
      return run_validate_theorem1(cfg, trials, seed, out_dir, opts);
    case PresetName::ValidateFoxh: return run_validate_foxh(out_dir);
  }
  throw std::logic_error("unreachable");
}

}  // namespace sbrsma
