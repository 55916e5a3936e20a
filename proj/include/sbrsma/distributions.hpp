#pragma once

#include <complex>
#include <vector>

#include "sbrsma/rng.hpp"

namespace sbrsma {

// Rayleigh block-fading rates: squared channel magnitudes are exponential
// with rate lambda0 (serving array -> backscatter device), lambda1/lambda2
// (array -> users) and omega1/omega2 (device -> users).
struct FadingParams {
  double lambda0 = 0.25;
  double lambda1 = 0.5;
  double lambda2 = 0.75;
  double omega1 = 0.5;
  double omega2 = 0.25;

  double lambda_k(int user) const { return user == 1 ? lambda1 : lambda2; }
  double omega_k(int user) const { return user == 1 ? omega1 : omega2; }
  void validate() const;  // all rates strictly positive and finite
};

// One fading block: h0 (array->device), h1/h2 (array->users), g1/g2 scalars.
struct ChannelRealization {
  std::vector<std::complex<double>> h0, h1, h2;
  std::complex<double> g1, g2;

  std::size_t antennas() const { return h0.size(); }
  std::complex<double> g_k(int user) const { return user == 1 ? g1 : g2; }
};

// Draw one block. Each entry of h0 is circularly-symmetric complex Gaussian
// with E|h|^2 = 1/lambda0, so |h|^2 ~ Exp(lambda0); likewise for the rest.
// Deterministic given the stream.
ChannelRealization sample_channel(const FadingParams& params, int antennas, Philox& rng);

// Omega * exp(-Omega z), z >= 0.
double exp_pdf(double z, double omega);

// Upper incomplete Gamma(shape, x) for integer shape >= 1, by the finite
// series (shape-1)! * sum_{m<shape} x^m e^{-x}/m!.
double upper_gamma_int(int shape, double x);

// P[Erlang(shape, rate) > z] = Gamma(shape, rate z)/(shape-1)!.
double tau_ccdf(double z, int shape, double rate);

namespace detail {
// Regularized upper gamma Q(shape, x) = sum_{m<shape} x^m e^{-x}/m!.
double regularized_gamma_q(int shape, double x);
}  // namespace detail

}  // namespace sbrsma
