#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbrsma/analysis.hpp"
#include "sbrsma/config.hpp"
#include "sbrsma/presets.hpp"
#include "sbrsma/report.hpp"

namespace {

sbrsma::ScenarioConfig load_or_default(const std::string& path) {
  if (path.empty()) return sbrsma::config_from_json_text("");
  return sbrsma::load_config(path);
}

sbrsma::CcsMode ccs_mode_from_string(const std::string& s) {
  if (s == "magnitude_sum") return sbrsma::CcsMode::MagnitudeSum;
  if (s == "sum_squared") return sbrsma::CcsMode::SumSquared;
  if (s == "norm_squared") return sbrsma::CcsMode::NormSquared;
  throw CLI::ValidationError("--ccs-mode", "must be magnitude_sum|sum_squared|norm_squared");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbiotic backscatter RSMA outage laboratory"};
  app.require_subcommand(1);

  // run --preset <name>
  auto* run = app.add_subcommand("run", "run an experiment preset");
  std::string preset_name, config_path, out_dir = "out", ccs_mode = "magnitude_sum";
  std::uint64_t trials = 100000, seed = 1;
  int workers = 0;
  run->add_option("--preset", preset_name, "one of: fig2_psi_sweep, fig3_antenna_sweep, "
                                           "fig4_rate_cases, validate_theorem1, validate_foxh")
      ->required();
  run->add_option("--config", config_path, "JSON scenario file (omitted = stock parameters)");
  run->add_option("--trials", trials, "Monte Carlo trials per grid point");
  run->add_option("--seed", seed, "base seed");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--ccs-mode", ccs_mode, "magnitude_sum|sum_squared|norm_squared");
  run->add_option("--workers", workers, "worker threads (default: SBRSMA_WORKERS or all cores)");

  // sop: single-point query
  auto* sop = app.add_subcommand("sop", "single-point outage query (JSON on stdout)");
  std::string strategy = "ccs", sop_config;
  double psi_db = 10.0, fixed_delta = 0.0;
  std::uint64_t sop_trials = 100000, sop_seed = 1;
  std::string sop_ccs_mode = "magnitude_sum";
  int sop_workers = 0;
  bool have_psi = false;
  sop->add_option("--strategy", strategy, "rcs|scs|mcs|ccs")->required();
  sop->add_option("--psi-db", psi_db, "average SNR in dB")->each([&](const std::string&) {
    have_psi = true;
  });
  sop->add_option("--config", sop_config, "JSON scenario file");
  sop->add_option("--trials", sop_trials, "Monte Carlo trials");
  sop->add_option("--seed", sop_seed, "seed");
  sop->add_option("--ccs-mode", sop_ccs_mode, "magnitude_sum|sum_squared|norm_squared");
  sop->add_option("--fixed-delta", fixed_delta, "benchmark with this fixed reflection coefficient");
  sop->add_option("--workers", sop_workers, "worker threads");

  // gain --csv --target
  auto* gain = app.add_subcommand("gain", "dB gains between curves at a target outage level");
  std::string gain_csv;
  double gain_target = 1e-3;
  gain->add_option("--csv", gain_csv, "sweep CSV produced by 'run'")->required();
  gain->add_option("--target", gain_target, "target outage probability")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto cfg = load_or_default(config_path);
      sbrsma::McOptions opts;
      opts.ccs_mode = ccs_mode_from_string(ccs_mode);
      opts.workers = workers;
      const auto preset = sbrsma::preset_from_string(preset_name);
      const auto res = sbrsma::run_preset(preset, cfg, trials, seed, out_dir, opts);
      for (const auto& f : res.files) std::printf("wrote %s\n", f.c_str());
      if (!res.ok) {
        std::fprintf(stderr, "validation preset reported disagreement\n");
        return 2;
      }
      return 0;
    }
    if (*sop) {
      auto cfg = load_or_default(sop_config);
      if (have_psi) cfg.set_psi_db(psi_db);
      sbrsma::McOptions opts;
      opts.ccs_mode = ccs_mode_from_string(sop_ccs_mode);
      opts.workers = sop_workers;
      const auto strat = sbrsma::gc_strategy_from_string(strategy);
      const sbrsma::SopEstimate est =
          fixed_delta > 0.0
              ? sbrsma::estimate_fixed_delta_sop(cfg, strat, fixed_delta, sop_trials, sop_seed, opts)
              : sbrsma::estimate_sop(cfg, strat, sop_trials, sop_seed, opts);
      nlohmann::json out;
      out["config"] = nlohmann::json::parse(sbrsma::config_to_json_text(cfg));
      out["strategy"] = strategy;
      out["delta_policy"] = fixed_delta > 0.0 ? "fixed_" + std::to_string(fixed_delta) : "adaptive";
      out["estimate"] = {{"sop", est.value},
                         {"std_error", est.std_error},
                         {"ci95", {est.ci_lo, est.ci_hi}},
                         {"trials", est.trials},
                         {"seed", sop_seed},
                         {"rejected_blocks", est.rejected_blocks}};
      if (strat == sbrsma::GcStrategy::Ccs && fixed_delta <= 0.0)
        out["closed_form"] = sbrsma::sop_closed_form(cfg);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*gain) {
      const auto rows = sbrsma::rows_from_csv_text(sbrsma::read_text_file(gain_csv));
      const auto rep = sbrsma::report_gain(rows, gain_target);
      std::cout << sbrsma::gain_report_to_text(rep);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
