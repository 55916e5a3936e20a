#include "sbrsma/cgamma.hpp"

#include <cmath>

namespace sbrsma {
namespace {

// Lanczos g = 7, 9 terms. Relative accuracy ~1e-13 over the half-plane
// Re z >= 0.5, which is where the reflection step always lands.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;
constexpr double kPi = 3.1415926535897932384626433832795;

std::complex<double> lanczos_right(std::complex<double> z) {
  std::complex<double> acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z - 1.0 + static_cast<double>(i));
  const std::complex<double> t = z + 6.5;
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(acc);
}

// exp(v) - 1 without cancellation for small |v|.
std::complex<double> expm1_c(std::complex<double> v) {
  if (std::abs(v) > 0.25) return std::exp(v) - 1.0;
  std::complex<double> term = v;
  std::complex<double> sum = v;
  for (int k = 2; k < 24; ++k) {
    term *= v / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

std::complex<double> log_sin_pi(std::complex<double> z) {
  if (z.imag() == 0.0) {
    // Real axis: range-reduce before sin so large arguments stay accurate.
    const double r = std::remainder(z.real(), 2.0);
    return std::log(std::complex<double>(std::sin(kPi * r), 0.0));
  }
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // Im z > 0: sin(pi z) = -(e^{-i pi z}/2i)(1 - e^{2 i pi z}), |e^{2 i pi z}| < 1.
  // Reduce Re z modulo 1 so that 1 - e^{2 i pi z} is formed without
  // cancellation when z sits near an integer.
  const double zr = z.real() - std::round(z.real());
  const std::complex<double> v(-2.0 * kPi * z.imag(), 2.0 * kPi * zr);
  const std::complex<double> one_minus = -expm1_c(v);
  const std::complex<double> i_pi_z(-kPi * z.imag(), kPi * z.real());
  return -i_pi_z + std::log(one_minus) - std::log(2.0) +
         std::complex<double>(0.0, kPi / 2.0);
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return lanczos_right(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(kPi) - log_sin_pi(z) - lanczos_right(1.0 - z);
}

}  // namespace sbrsma
