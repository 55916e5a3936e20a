#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbrsma/scenario.hpp"

namespace sbrsma {

// How the Ccs strategy maps the gain-control scalar onto the |theta|^2 that
// enters the SINRs. MagnitudeSum uses the magnitude sum itself (the variable
// the closed-form analysis models), SumSquared squares it, NormSquared is
// the diagnostic reading under which the analysis' Erlang law is exact.
enum class CcsMode { MagnitudeSum, SumSquared, NormSquared };

const char* to_string(CcsMode m);

struct SopEstimate {
  double value = 0.0;
  std::uint64_t trials = 0;
  double std_error = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;
  std::uint64_t rejected_blocks = 0;
};

struct McOptions {
  CcsMode ccs_mode = CcsMode::MagnitudeSum;
  int workers = 0;  // 0 = SBRSMA_WORKERS env or hardware concurrency
  bool joint_indicator = false;  // fixed-delta: one joint event instead of the per-user product
  std::optional<double> theta_sq_override;  // diagnostic hook
  double cond_cap = 1e12;
};

// Per-trial outage indicator behind estimate_sop, exposed for the
// consistency harnesses.
struct TrialResult {
  bool outage = false;
  std::uint32_t rejections = 0;
  DeltaInterval interval;
  double tau_1 = 0.0, tau_2 = 0.0, theta_sq = 0.0, g1_sq = 0.0, g2_sq = 0.0;
};

TrialResult run_sop_trial(const ScenarioConfig& cfg, GcStrategy strategy,
                          std::uint64_t seed, std::uint64_t trial, const McOptions& opts = {});

// Monte Carlo estimate of the symbiotic outage probability: a trial is an
// outage when no reflection coefficient in (0,1] satisfies all six SIC
// inequalities at once. Bit-reproducible for fixed (cfg, strategy, trials,
// seed) under any worker count.
SopEstimate estimate_sop(const ScenarioConfig& cfg, GcStrategy strategy,
                         std::uint64_t trials, std::uint64_t seed, const McOptions& opts = {});

// Fixed reflection-coefficient benchmark: per-user success probabilities
// estimated on independent substreams and combined as 1 - p1*p2.
SopEstimate estimate_fixed_delta_sop(const ScenarioConfig& cfg, GcStrategy strategy,
                                     double delta, std::uint64_t trials, std::uint64_t seed,
                                     const McOptions& opts = {});

enum class SweepAxis { PsiDb, Antennas, RateB };

SweepAxis sweep_axis_from_string(const std::string& name);

// One result row, carrying every input needed to reproduce it.
struct SweepRow {
  std::string strategy;
  int antennas = 0;
  double psi_db = 0.0;
  double rc = 0.0, r1 = 0.0, r2 = 0.0, rb = 0.0;
  double alpha_c = 0.0, alpha_1 = 0.0, alpha_2 = 0.0;
  double eta = 0.0;
  std::string delta_policy;  // "adaptive" or "fixed_<value>"
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SopEstimate est;
};

std::vector<SweepRow> sweep(const ScenarioConfig& base,
                            const std::vector<GcStrategy>& strategies, SweepAxis axis,
                            const std::vector<double>& grid, std::uint64_t trials,
                            std::uint64_t seed, const McOptions& opts = {});

// Worker-count resolution used by the estimators (exposed for the CLI).
int resolve_workers(int requested);

// Deterministic per-point seed derivation used by sweep and the presets.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace sbrsma
