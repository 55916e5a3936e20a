#pragma once

#include <complex>

namespace sbrsma {

// log Gamma(z) over the complex plane (Lanczos, reflection for Re z < 0.5).
// The returned imaginary part is *some* branch of the logarithm: downstream
// code only ever exponentiates sums of these, for which any branch is exact.
std::complex<double> log_gamma(std::complex<double> z);

// log sin(pi z), branch-agnostic in the same sense; overflow-safe for large
// |Im z| where sin(pi z) itself would not be representable.
std::complex<double> log_sin_pi(std::complex<double> z);

}  // namespace sbrsma
