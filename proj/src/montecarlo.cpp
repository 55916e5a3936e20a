#include "sbrsma/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

namespace sbrsma {

void ScenarioConfig::validate() const {
  if (antennas < 3) throw std::invalid_argument("scenario needs at least 3 antennas");
  fading.validate();
  split.validate();
  rates.validate();
  if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("eta must be in (0,1]");
  if (!(psi > 0.0)) throw std::invalid_argument("psi must be positive");
}

const char* to_string(CcsMode m) {
  switch (m) {
    case CcsMode::MagnitudeSum: return "magnitude_sum";
    case CcsMode::SumSquared: return "sum_squared";
    case CcsMode::NormSquared: return "norm_squared";
  }
  return "?";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
  if (name == "Psi_dB" || name == "psi_db") return SweepAxis::PsiDb;
  if (name == "L" || name == "antennas") return SweepAxis::Antennas;
  if (name == "rates" || name == "Rb" || name == "rb") return SweepAxis::RateB;
  throw std::invalid_argument("unknown sweep axis: " + name);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SBRSMA_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

constexpr std::uint32_t kLaneChannels = 0;
constexpr std::uint32_t kLaneGainControl = 1;
// Fixed-delta benchmark lanes, one pair per user so the two per-user
// probabilities come from independent substreams.
constexpr std::uint32_t kLaneFixedUser = 10;
constexpr std::uint32_t kLaneFixedGc = 20;

constexpr std::uint32_t kMaxResamples = 1024;

struct BlockDraw {
  ChannelRealization ch;
  double theta = 0.0;
  std::uint32_t rejections = 0;
};

// Sample one admissible fading block: blocks whose Gram system exceeds the
// condition cap are rejected and redrawn from the same stream.
BlockDraw draw_block(const ScenarioConfig& cfg, GcStrategy strategy, Philox& ch_rng,
                     Philox& gc_rng, double cond_cap) {
  BlockDraw b;
  for (;;) {
    b.ch = sample_channel(cfg.fading, cfg.antennas, ch_rng);
    try {
      (void)zf_weight_matrix(b.ch.h0, b.ch.h1, b.ch.h2, cond_cap);
      break;
    } catch (const SingularChannelError&) {
      if (++b.rejections > kMaxResamples)
        throw std::runtime_error("fading block rejected more than 1024 times in a row");
    }
  }
  b.theta = gain_control(b.ch.h0, strategy, gc_rng);
  return b;
}

double theta_squared(const BlockDraw& b, GcStrategy strategy, const McOptions& opts) {
  if (opts.theta_sq_override) return *opts.theta_sq_override;
  if (strategy == GcStrategy::Ccs) {
    switch (opts.ccs_mode) {
      case CcsMode::MagnitudeSum: return b.theta;  // magnitude sum, unsquared
      case CcsMode::SumSquared: return b.theta * b.theta;
      case CcsMode::NormSquared: return norm_sq(b.ch.h0);
    }
  }
  return b.theta * b.theta;
}

SopEstimate finalize(std::uint64_t failures, std::uint64_t trials, std::uint64_t rejected) {
  SopEstimate e;
  e.trials = trials;
  e.rejected_blocks = rejected;
  e.value = static_cast<double>(failures) / static_cast<double>(trials);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
  e.ci_lo = std::max(0.0, e.value - 1.96 * e.std_error);
  e.ci_hi = std::min(1.0, e.value + 1.96 * e.std_error);
  return e;
}

// Runs fn(trial) -> {failure, rejections} over [0, trials) on the resolved
// worker count; integer reductions keep the result worker-count independent.
template <typename Fn>
std::pair<std::uint64_t, std::uint64_t> parallel_trials(std::uint64_t trials, int workers,
                                                        const Fn& fn) {
  workers = std::max(1, std::min<int>(workers, trials > 0 ? static_cast<int>(std::min<std::uint64_t>(trials, 256)) : 1));
  std::vector<std::uint64_t> fail(workers, 0), rej(workers, 0);
  std::vector<std::exception_ptr> errs(workers);
  auto body = [&](int w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    try {
      for (std::uint64_t t = lo; t < hi; ++t) {
        const auto [failure, rejections] = fn(t);
        fail[w] += failure ? 1 : 0;
        rej[w] += rejections;
      }
    } catch (...) {
      errs[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  std::uint64_t failures = 0, rejected = 0;
  for (int w = 0; w < workers; ++w) {
    failures += fail[w];
    rejected += rej[w];
  }
  return {failures, rejected};
}

void check_rejection_budget(const SopEstimate& e) {
  if (e.trials >= 100 && e.rejected_blocks * 100 > e.trials)
    throw std::runtime_error("singular-channel rejections exceeded 1% of trials; "
                             "check fading parameters / condition cap");
}

}  // namespace

TrialResult run_sop_trial(const ScenarioConfig& cfg, GcStrategy strategy, std::uint64_t seed,
                          std::uint64_t trial, const McOptions& opts) {
  Philox ch_rng(seed, trial, kLaneChannels);
  Philox gc_rng(seed, trial, kLaneGainControl);
  const BlockDraw b = draw_block(cfg, strategy, ch_rng, gc_rng, opts.cond_cap);

  TrialResult r;
  r.rejections = b.rejections;
  r.tau_1 = norm_sq(b.ch.h1);
  r.tau_2 = norm_sq(b.ch.h2);
  r.theta_sq = theta_squared(b, strategy, opts);
  r.g1_sq = std::norm(b.ch.g1);
  r.g2_sq = std::norm(b.ch.g2);
  r.interval = delta_range(r.tau_1, r.tau_2, r.theta_sq, r.g1_sq, r.g2_sq, cfg.split,
                           cfg.rates, cfg.eta, cfg.psi);
  r.outage = !r.interval.feasible;
  return r;
}

SopEstimate estimate_sop(const ScenarioConfig& cfg, GcStrategy strategy, std::uint64_t trials,
                         std::uint64_t seed, const McOptions& opts) {
  cfg.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int workers = resolve_workers(opts.workers);
  const auto [failures, rejected] = parallel_trials(trials, workers, [&](std::uint64_t t) {
    const TrialResult r = run_sop_trial(cfg, strategy, seed, t, opts);
    return std::pair<bool, std::uint64_t>(r.outage, r.rejections);
  });
  const SopEstimate e = finalize(failures, trials, rejected);
  check_rejection_budget(e);
  return e;
}

SopEstimate estimate_fixed_delta_sop(const ScenarioConfig& cfg, GcStrategy strategy,
                                     double delta, std::uint64_t trials, std::uint64_t seed,
                                     const McOptions& opts) {
  cfg.validate();
  if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("delta must be in (0,1]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int workers = resolve_workers(opts.workers);

  BackscatterParams bp;
  bp.eta = cfg.eta;
  bp.delta = delta;
  bp.psi = cfg.psi;

  auto user_success = [&](int user, const BlockDraw& b) {
    const double tau = user == 1 ? norm_sq(b.ch.h1) : norm_sq(b.ch.h2);
    const double g_sq = std::norm(b.ch.g_k(user));
    const SinrTriple s = simplified_sinrs(tau, theta_squared(b, strategy, opts), g_sq,
                                          cfg.split, bp, user);
    return s.gamma_c > cfg.rates.gbar_c && s.gamma_k > cfg.rates.gbar_k(user) &&
           s.gamma_b > cfg.rates.gbar_b;
  };

  if (opts.joint_indicator) {
    const auto [failures, rejected] = parallel_trials(trials, workers, [&](std::uint64_t t) {
      Philox ch_rng(seed, t, kLaneChannels);
      Philox gc_rng(seed, t, kLaneGainControl);
      const BlockDraw b = draw_block(cfg, strategy, ch_rng, gc_rng, opts.cond_cap);
      const bool ok = user_success(1, b) && user_success(2, b);
      return std::pair<bool, std::uint64_t>(!ok, b.rejections);
    });
    const SopEstimate e = finalize(failures, trials, rejected);
    check_rejection_budget(e);
    return e;
  }

  // Product form: each user's joint decoding probability on its own substream.
  double p[2] = {0.0, 0.0};
  std::uint64_t rejected_total = 0;
  for (int user = 1; user <= 2; ++user) {
    const auto [failures, rejected] = parallel_trials(trials, workers, [&](std::uint64_t t) {
      Philox ch_rng(seed, t, kLaneFixedUser + user - 1);
      Philox gc_rng(seed, t, kLaneFixedGc + user - 1);
      const BlockDraw b = draw_block(cfg, strategy, ch_rng, gc_rng, opts.cond_cap);
      return std::pair<bool, std::uint64_t>(!user_success(user, b), b.rejections);
    });
    p[user - 1] = 1.0 - static_cast<double>(failures) / static_cast<double>(trials);
    rejected_total += rejected;
  }
  SopEstimate e;
  e.trials = trials;
  e.rejected_blocks = rejected_total;
  e.value = 1.0 - p[0] * p[1];
  // Delta-method error bar for 1 - p1*p2 from two independent estimates.
  const double n = static_cast<double>(trials);
  const double var = p[1] * p[1] * p[0] * (1.0 - p[0]) / n + p[0] * p[0] * p[1] * (1.0 - p[1]) / n;
  e.std_error = std::sqrt(var);
  e.ci_lo = std::max(0.0, e.value - 1.96 * e.std_error);
  e.ci_hi = std::min(1.0, e.value + 1.96 * e.std_error);
  check_rejection_budget(e);
  return e;
}

std::vector<SweepRow> sweep(const ScenarioConfig& base, const std::vector<GcStrategy>& strategies,
                            SweepAxis axis, const std::vector<double>& grid,
                            std::uint64_t trials, std::uint64_t seed, const McOptions& opts) {
  if (grid.empty()) throw std::invalid_argument("sweep grid must be nonempty");
  std::vector<SweepRow> rows;
  rows.reserve(strategies.size() * grid.size());
  for (std::size_t si = 0; si < strategies.size(); ++si) {
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      ScenarioConfig cfg = base;
      switch (axis) {
        case SweepAxis::PsiDb:
          cfg.set_psi_db(grid[gi]);
          break;
        case SweepAxis::Antennas: {
          const double v = grid[gi];
          if (v != std::floor(v)) throw std::invalid_argument("antenna grid must be integral");
          cfg.antennas = static_cast<int>(v);
          break;
        }
        case SweepAxis::RateB:
          cfg.rates.rb = grid[gi];
          cfg.rates.refresh();
          break;
      }
      const std::uint64_t point_seed = derive_seed(seed, si * 100003u + gi);
      SweepRow row;
      row.strategy = to_string(strategies[si]);
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
      row.delta_policy = "adaptive";
      row.trials = trials;
      row.seed = point_seed;
      row.est = estimate_sop(cfg, strategies[si], trials, point_seed, opts);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace sbrsma
