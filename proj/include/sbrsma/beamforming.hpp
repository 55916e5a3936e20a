#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbrsma/rng.hpp"

namespace sbrsma {

using cvec = std::vector<std::complex<double>>;

// Fading block whose stacked-channel Gram matrix is (near-)rank-deficient;
// callers reject the block and resample.
struct SingularChannelError : std::runtime_error {
  explicit SingularChannelError(const std::string& what) : std::runtime_error(what) {}
};

// Columns of the zero-forcing weight matrix: col[i] satisfies
// h_i^H col[j] = delta_ij for the stacked channels (h0, h1, h2).
struct ZfMatrix {
  std::array<cvec, 3> col;
};

enum class GcStrategy { Rcs, Scs, Mcs, Ccs };

const char* to_string(GcStrategy s);
GcStrategy gc_strategy_from_string(const std::string& name);

// Final transmit weights: w_k = col[k] * ||h_k|| (zero-forcing direction with
// matched-gain scaling), w0 = col[0] * theta, wc = w0 + w1 + w2.
struct BeamformerSet {
  ZfMatrix wtilde;
  cvec w1, w2, wc;
  std::complex<double> theta;

  const cvec& w_k(int user) const { return user == 1 ? w1 : w2; }
};

std::complex<double> dot(const cvec& a, const cvec& b);  // a^H b
double norm_sq(const cvec& a);

// W = H^H (H H^H)^{-1} for H with rows h0^H, h1^H, h2^H, computed by solving
// the 3x3 Gram system. Blocks whose Gram condition number exceeds cond_cap
// raise SingularChannelError.
ZfMatrix zf_weight_matrix(const cvec& h0, const cvec& h1, const cvec& h2,
                          double cond_cap = 1e12);

// Gain-control scalar from the |h0| entry magnitudes: random pick (Rcs),
// min (Scs), max (Mcs) or sum (Ccs). Rcs consumes exactly one draw.
double gain_control(const cvec& h0, GcStrategy strategy, Philox& rng);

BeamformerSet build_weights(const ZfMatrix& wtilde, const cvec& h1, const cvec& h2,
                            std::complex<double> theta);

namespace detail {
// Eigenvalues of a 3x3 Hermitian matrix (ascending), used for the condition
// estimate of the Gram system.
std::array<double, 3> hermitian3_eigenvalues(const std::array<std::array<std::complex<double>, 3>, 3>& a);
}  // namespace detail

}  // namespace sbrsma
