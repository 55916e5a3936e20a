#include "sbrsma/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace sbrsma {

void FadingParams::validate() const {
  for (double r : {lambda0, lambda1, lambda2, omega1, omega2}) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("fading rates must be strictly positive and finite");
  }
}

ChannelRealization sample_channel(const FadingParams& params, int antennas, Philox& rng) {
  params.validate();
  if (antennas < 1) throw std::invalid_argument("antenna count must be >= 1");
  ChannelRealization ch;
  ch.h0.resize(antennas);
  ch.h1.resize(antennas);
  ch.h2.resize(antennas);
  for (int l = 0; l < antennas; ++l) ch.h0[l] = rng.next_cgauss(1.0 / params.lambda0);
  for (int l = 0; l < antennas; ++l) ch.h1[l] = rng.next_cgauss(1.0 / params.lambda1);
  for (int l = 0; l < antennas; ++l) ch.h2[l] = rng.next_cgauss(1.0 / params.lambda2);
  ch.g1 = rng.next_cgauss(1.0 / params.omega1);
  ch.g2 = rng.next_cgauss(1.0 / params.omega2);
  return ch;
}

double exp_pdf(double z, double omega) {
  if (z < 0.0) throw std::domain_error("exp_pdf: z must be nonnegative");
  if (!(omega > 0.0)) throw std::invalid_argument("exp_pdf: rate must be positive");
  return omega * std::exp(-omega * z);
}

namespace detail {

double regularized_gamma_q(int shape, double x) {
  if (shape < 1) throw std::invalid_argument("shape must be a positive integer");
  if (x < 0.0) throw std::domain_error("x must be nonnegative");
  // sum_{m<shape} x^m/m!, then fold in e^{-x}; term recurrence is stable and
  // cannot overflow before the multiply by e^{-x} for the sizes used here.
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < shape; ++m) {
    term *= x / m;
    sum += term;
  }
  const double v = sum * std::exp(-x);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace detail

double upper_gamma_int(int shape, double x) {
  return std::tgamma(static_cast<double>(shape)) * detail::regularized_gamma_q(shape, x);
}

double tau_ccdf(double z, int shape, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("tau_ccdf: rate must be positive");
  return detail::regularized_gamma_q(shape, rate * z);
}

}  // namespace sbrsma
