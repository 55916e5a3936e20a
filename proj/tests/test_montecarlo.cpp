#include <doctest.h>

#include <cmath>

#include "sbrsma/analysis.hpp"
#include "sbrsma/montecarlo.hpp"

using namespace sbrsma;

namespace {

ScenarioConfig stock(double psi_db = 10.0) {
  ScenarioConfig cfg;
  cfg.set_psi_db(psi_db);
  return cfg;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("vanishing thresholds drive the outage to zero") {
  ScenarioConfig cfg = stock(10.0);
  cfg.rates = RateTargets(1e-9, 1e-9, 1e-9, 1e-9);
  const SopEstimate e = estimate_sop(cfg, GcStrategy::Ccs, 20000, 3);
  CHECK(e.value < 3e-4);
}

TEST_CASE("vanishing SNR drives the outage to one") {
  const SopEstimate e = estimate_sop(stock(-40.0), GcStrategy::Ccs, 20000, 3);
  CHECK(e.value == doctest::Approx(1.0));
}

TEST_CASE("identical inputs are bit-identical under any worker count") {
  const ScenarioConfig cfg = stock(12.0);
  for (auto strategy : {GcStrategy::Rcs, GcStrategy::Ccs}) {
    McOptions w1;
    w1.workers = 1;
    McOptions w3;
    w3.workers = 3;
    McOptions w8;
    w8.workers = 8;
    const SopEstimate a = estimate_sop(cfg, strategy, 40000, 99, w1);
    const SopEstimate b = estimate_sop(cfg, strategy, 40000, 99, w3);
    const SopEstimate c = estimate_sop(cfg, strategy, 40000, 99, w8);
    CHECK(a.value == b.value);
    CHECK(b.value == c.value);
    CHECK(a.rejected_blocks == c.rejected_blocks);
  }
}

TEST_CASE("per-trial interval agrees with the outage flag") {
  const ScenarioConfig cfg = stock(10.0);
  int feasible = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const TrialResult r = run_sop_trial(cfg, GcStrategy::Mcs, 17, t);
    CHECK(r.outage == !r.interval.feasible);
    if (r.interval.feasible) {
      ++feasible;
      CHECK(r.interval.lo < r.interval.hi);
      CHECK(r.interval.hi <= 1.0);
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("std_error shrinks like 1/sqrt(trials)") {
  const ScenarioConfig cfg = stock(10.0);
  const SopEstimate small = estimate_sop(cfg, GcStrategy::Ccs, 20000, 5);
  const SopEstimate big = estimate_sop(cfg, GcStrategy::Ccs, 80000, 5);
  CHECK(big.std_error < small.std_error);
  CHECK(big.std_error == doctest::Approx(small.std_error / 2.0).epsilon(0.15));
  CHECK(small.ci_lo <= small.value);
  CHECK(small.value <= small.ci_hi);
}

TEST_CASE("closed form tracks the exact-law ccs reading") {
  // Under the norm-squared reading the analysis channel law is exact, so
  // the Monte Carlo must sit on the closed form up to sampling noise.
  const ScenarioConfig cfg = stock(12.5);
  McOptions opts;
  opts.ccs_mode = CcsMode::NormSquared;
  const SopEstimate e = estimate_sop(cfg, GcStrategy::Ccs, 60000, 13, opts);
  const double cf = sop_closed_form(cfg);
  CHECK(std::abs(e.value - cf) < 4.0 * e.std_error);
}

TEST_CASE("ccs theta-power conventions stay ordered") {
  const ScenarioConfig cfg = stock(10.0);
  McOptions lit, phys;
  lit.ccs_mode = CcsMode::MagnitudeSum;
  phys.ccs_mode = CcsMode::SumSquared;
  const double a = estimate_sop(cfg, GcStrategy::Ccs, 40000, 11, lit).value;
  const double b = estimate_sop(cfg, GcStrategy::Ccs, 40000, 11, phys).value;
  // the squared sum dominates the raw sum whenever the sum exceeds 1, which
  // at these fading scales is essentially always
  CHECK(b <= a + 3.0 * 0.005);
}

TEST_CASE("fixed-delta benchmark") {
  const ScenarioConfig cfg = stock(15.0);
  SUBCASE("unreachable backscatter threshold saturates") {
    ScenarioConfig hard = cfg;
    hard.rates = RateTargets(0.5, 1.0, 1.5, 20.0);
    const SopEstimate e = estimate_fixed_delta_sop(hard, GcStrategy::Ccs, 0.3, 5000, 7);
    CHECK(e.value == doctest::Approx(1.0));
  }
  SUBCASE("theta override of zero never decodes the backscatter symbol") {
    McOptions opts;
    opts.theta_sq_override = 0.0;
    const SopEstimate e = estimate_fixed_delta_sop(cfg, GcStrategy::Ccs, 0.7, 5000, 7, opts);
    CHECK(e.value == doctest::Approx(1.0));
  }
  SUBCASE("adaptive delta never does worse than a fixed one") {
    const double fixed = estimate_fixed_delta_sop(cfg, GcStrategy::Ccs, 0.3, 60000, 21).value;
    const double adaptive = estimate_sop(cfg, GcStrategy::Ccs, 60000, 21).value;
    CHECK(adaptive <= fixed + 0.01);
  }
  SUBCASE("joint-indicator variant is available and close to the product form") {
    McOptions joint;
    joint.joint_indicator = true;
    const double a = estimate_fixed_delta_sop(cfg, GcStrategy::Ccs, 0.3, 60000, 31).value;
    const double b = estimate_fixed_delta_sop(cfg, GcStrategy::Ccs, 0.3, 60000, 31, joint).value;
    CHECK(std::abs(a - b) < 0.03);  // they differ only through the shared-h0 dependence
  }
}

TEST_CASE("sweep") {
  const ScenarioConfig cfg = stock();
  SUBCASE("single grid point equals a direct estimate") {
    const auto rows = sweep(cfg, {GcStrategy::Ccs}, SweepAxis::PsiDb, {10.0}, 20000, 77);
    REQUIRE(rows.size() == 1);
    const SopEstimate direct = estimate_sop(stock(10.0), GcStrategy::Ccs, 20000, rows[0].seed);
    CHECK(rows[0].est.value == direct.value);
    CHECK(rows[0].psi_db == doctest::Approx(10.0));
    CHECK(rows[0].delta_policy == "adaptive");
  }
  SUBCASE("outage is nonincreasing along the SNR grid") {
    const auto rows =
        sweep(cfg, {GcStrategy::Ccs}, SweepAxis::PsiDb, {0, 10, 20, 30}, 40000, 78);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double slack =
          3.0 * std::sqrt(rows[i].est.std_error * rows[i].est.std_error +
                          rows[i + 1].est.std_error * rows[i + 1].est.std_error);
      CHECK(rows[i + 1].est.value <= rows[i].est.value + slack);
    }
  }
  SUBCASE("outage is nonincreasing in the antenna count") {
    const auto rows =
        sweep(stock(15.0), {GcStrategy::Ccs}, SweepAxis::Antennas, {3, 4, 5, 6}, 40000, 79);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double slack =
          3.0 * std::sqrt(rows[i].est.std_error * rows[i].est.std_error +
                          rows[i + 1].est.std_error * rows[i + 1].est.std_error);
      CHECK(rows[i + 1].est.value <= rows[i].est.value + slack);
    }
  }
  SUBCASE("bad axis values are rejected") {
    CHECK_THROWS_AS(sweep(cfg, {GcStrategy::Ccs}, SweepAxis::Antennas, {3.5}, 100, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(cfg, {GcStrategy::Ccs}, SweepAxis::PsiDb, {}, 100, 1),
                    std::invalid_argument);
  }
}

}  // TEST_SUITE
