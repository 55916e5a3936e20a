#include <doctest.h>

#include <cmath>

#include "sbrsma/beamforming.hpp"
#include "sbrsma/distributions.hpp"
#include "support/oracles.hpp"

using namespace sbrsma;

TEST_SUITE("distributions") {

TEST_CASE("exp_pdf values") {
  CHECK(exp_pdf(0.0, 1.0) == doctest::Approx(1.0));
  CHECK(exp_pdf(0.0, 0.25) == doctest::Approx(0.25));
  CHECK(exp_pdf(2.0, 0.5) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(exp_pdf(-0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(exp_pdf(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("upper_gamma_int against hand series") {
  // Gamma(1, x) = e^{-x}
  for (double x : {0.0, 0.3, 2.0, 11.0})
    CHECK(upper_gamma_int(1, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
  // Gamma(L, 0) = (L-1)!
  CHECK(upper_gamma_int(4, 0.0) == doctest::Approx(6.0));
  CHECK(upper_gamma_int(6, 0.0) == doctest::Approx(120.0));
  // Gamma(3, 2) = 10 e^{-2}
  CHECK(upper_gamma_int(3, 2.0) == doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("upper_gamma_int equals the defining integral to 1e-10") {
  for (int shape = 1; shape <= 8; ++shape) {
    for (double x : {0.0, 0.5, 1.0, 5.0, 12.0, 20.0}) {
      const double ref = oracles::integrate(
          [&](double t) { return std::pow(t, shape - 1) * std::exp(-t); }, x, x + 90.0, 256);
      CHECK(upper_gamma_int(shape, x) == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("tau_ccdf basics") {
  CHECK(tau_ccdf(0.0, 4, 0.5) == doctest::Approx(1.0));
  CHECK(tau_ccdf(1e9, 4, 0.5) == doctest::Approx(0.0));
  // Gamma(4,1)/3! = e^{-1} (1 + 1 + 1/2 + 1/6)
  CHECK(tau_ccdf(2.0, 4, 0.5) ==
        doctest::Approx(std::exp(-1.0) * (1 + 1 + 0.5 + 1.0 / 6.0)).epsilon(1e-13));
  // shape 1 is plain exponential
  for (double z : {0.1, 1.0, 7.0})
    CHECK(tau_ccdf(z, 1, 0.7) == doctest::Approx(std::exp(-0.7 * z)).epsilon(1e-13));
}

TEST_CASE("tau_ccdf stays in [0,1] and is nonincreasing") {
  double prev = 1.0;
  for (int i = 0; i <= 400; ++i) {
    const double z = i * 0.25;
    const double v = tau_ccdf(z, 5, 0.8);
    CHECK(v <= 1.0);
    CHECK(v >= 0.0);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("sampling means match the fading rates") {
  FadingParams p;
  p.lambda0 = 1.0;
  p.lambda1 = 0.5;
  p.omega1 = 0.5;
  Philox rng(42, 0);
  const int draws = 1000000;
  double mean_h0 = 0.0, mean_g1 = 0.0, mean_tau1 = 0.0;
  for (int i = 0; i < draws / 4; ++i) {
    const ChannelRealization ch = sample_channel(p, 4, rng);
    for (const auto& h : ch.h0) mean_h0 += std::norm(h);
    mean_g1 += std::norm(ch.g1);
    mean_tau1 += norm_sq(ch.h1);
  }
  mean_h0 /= draws;
  mean_g1 /= draws / 4;
  mean_tau1 /= draws / 4;
  CHECK(mean_h0 == doctest::Approx(1.0).epsilon(0.01));       // Exp(1) mean
  CHECK(mean_g1 == doctest::Approx(2.0).epsilon(0.01));       // Exp(0.5) mean
  CHECK(mean_tau1 == doctest::Approx(8.0).epsilon(0.01));     // sum of 4 Exp(0.5) means
}

TEST_CASE("sampling is deterministic per (seed, trial)") {
  FadingParams p;
  Philox a(7, 123), b(7, 123), c(8, 123);
  const auto ch_a = sample_channel(p, 4, a);
  const auto ch_b = sample_channel(p, 4, b);
  const auto ch_c = sample_channel(p, 4, c);
  CHECK(ch_a.h0 == ch_b.h0);
  CHECK(ch_a.g2 == ch_b.g2);
  CHECK(ch_a.h0 != ch_c.h0);
}

TEST_CASE("sampling rejects invalid configuration") {
  FadingParams p;
  Philox rng(1, 0);
  CHECK_THROWS_AS(sample_channel(p, 0, rng), std::invalid_argument);
  p.lambda1 = -1.0;
  CHECK_THROWS_AS(sample_channel(p, 4, rng), std::invalid_argument);
}

TEST_CASE("||h_k||^2 is Erlang: KS distance below 0.01") {
  FadingParams p;
  p.lambda1 = 0.5;
  const int n = 100000;
  const int antennas = 4;
  std::vector<double> sample(n);
  for (int i = 0; i < n; ++i) {
    Philox rng(2024, i);
    sample[i] = norm_sq(sample_channel(p, antennas, rng).h1);
  }
  const double d = oracles::ks_distance(
      sample, [&](double z) { return 1.0 - tau_ccdf(z, antennas, p.lambda1); });
  CHECK(d < 0.01);
}

}  // TEST_SUITE
