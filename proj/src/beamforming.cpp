#include "sbrsma/beamforming.hpp"

#include <algorithm>
#include <cmath>

namespace sbrsma {

const char* to_string(GcStrategy s) {
  switch (s) {
    case GcStrategy::Rcs: return "rcs";
    case GcStrategy::Scs: return "scs";
    case GcStrategy::Mcs: return "mcs";
    case GcStrategy::Ccs: return "ccs";
  }
  return "?";
}

GcStrategy gc_strategy_from_string(const std::string& name) {
  if (name == "rcs") return GcStrategy::Rcs;
  if (name == "scs") return GcStrategy::Scs;
  if (name == "mcs") return GcStrategy::Mcs;
  if (name == "ccs") return GcStrategy::Ccs;
  throw std::invalid_argument("unknown gain-control strategy: " + name);
}

std::complex<double> dot(const cvec& a, const cvec& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_sq(const cvec& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return s;
}

namespace detail {

std::array<double, 3> hermitian3_eigenvalues(
    const std::array<std::array<std::complex<double>, 3>, 3>& a) {
  // Trigonometric solution of the characteristic cubic; eigenvalues of a
  // Hermitian matrix are real.
  const double q = (a[0][0].real() + a[1][1].real() + a[2][2].real()) / 3.0;
  const double p1 = std::norm(a[0][1]) + std::norm(a[0][2]) + std::norm(a[1][2]);
  const double d0 = a[0][0].real() - q, d1 = a[1][1].real() - q, d2 = a[2][2].real() - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
  if (p2 <= 0.0) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);
  std::array<std::array<std::complex<double>, 3>, 3> b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b[i][j] = (a[i][j] - (i == j ? std::complex<double>(q) : 0.0)) / p;
  const std::complex<double> detb =
      b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
      b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
      b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  double r = detb.real() / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0943951023931954923);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> ev = {e3, e2, e1};
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace detail

ZfMatrix zf_weight_matrix(const cvec& h0, const cvec& h1, const cvec& h2, double cond_cap) {
  const std::size_t antennas = h0.size();
  if (h1.size() != antennas || h2.size() != antennas)
    throw std::invalid_argument("channel vectors must share the same length");
  if (antennas < 3)
    throw std::invalid_argument("zero-forcing three directions needs at least 3 antennas");

  const cvec* h[3] = {&h0, &h1, &h2};
  std::array<std::array<std::complex<double>, 3>, 3> gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram[i][j] = dot(*h[i], *h[j]);

  const auto ev = detail::hermitian3_eigenvalues(gram);
  if (!(ev[0] > 0.0) || ev[2] / ev[0] > cond_cap)
    throw SingularChannelError("gram matrix ill-conditioned (cond > cap)");

  // Cholesky gram = L L^H, then two triangular solves per unit column.
  std::array<std::array<std::complex<double>, 3>, 3> lo{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      std::complex<double> s = gram[i][j];
      for (int k = 0; k < j; ++k) s -= lo[i][k] * std::conj(lo[j][k]);
      if (i == j) {
        if (!(s.real() > 0.0)) throw SingularChannelError("gram matrix not positive definite");
        lo[i][j] = std::sqrt(s.real());
      } else {
        lo[i][j] = s / lo[j][j];
      }
    }
  }
  // ginv column c solves gram * x = e_c.
  std::array<std::array<std::complex<double>, 3>, 3> ginv;
  for (int c = 0; c < 3; ++c) {
    std::complex<double> y[3];
    for (int i = 0; i < 3; ++i) {
      std::complex<double> s = (i == c) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) s -= lo[i][k] * y[k];
      y[i] = s / lo[i][i];
    }
    for (int i = 2; i >= 0; --i) {
      std::complex<double> s = y[i];
      for (int k = i + 1; k < 3; ++k) s -= std::conj(lo[k][i]) * ginv[k][c];
      ginv[i][c] = s / lo[i][i];
    }
  }

  ZfMatrix w;
  for (int j = 0; j < 3; ++j) {
    w.col[j].assign(antennas, 0.0);
    for (int i = 0; i < 3; ++i) {
      const std::complex<double> coef = ginv[i][j];
      for (std::size_t l = 0; l < antennas; ++l) w.col[j][l] += (*h[i])[l] * coef;
    }
  }
  return w;
}

double gain_control(const cvec& h0, GcStrategy strategy, Philox& rng) {
  if (h0.empty() || norm_sq(h0) == 0.0)
    throw std::invalid_argument("gain control on a degenerate (zero) channel");
  switch (strategy) {
    case GcStrategy::Rcs:
      return std::abs(h0[rng.next_below(static_cast<std::uint32_t>(h0.size()))]);
    case GcStrategy::Scs: {
      double v = std::abs(h0[0]);
      for (const auto& x : h0) v = std::min(v, std::abs(x));
      return v;
    }
    case GcStrategy::Mcs: {
      double v = 0.0;
      for (const auto& x : h0) v = std::max(v, std::abs(x));
      return v;
    }
    case GcStrategy::Ccs: {
      double v = 0.0;
      for (const auto& x : h0) v += std::abs(x);
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

BeamformerSet build_weights(const ZfMatrix& wtilde, const cvec& h1, const cvec& h2,
                            std::complex<double> theta) {
  const std::size_t antennas = wtilde.col[0].size();
  BeamformerSet bf;
  bf.wtilde = wtilde;
  bf.theta = theta;
  const double n1 = std::sqrt(norm_sq(h1));
  const double n2 = std::sqrt(norm_sq(h2));
  bf.w1.resize(antennas);
  bf.w2.resize(antennas);
  bf.wc.resize(antennas);
  for (std::size_t l = 0; l < antennas; ++l) {
    bf.w1[l] = wtilde.col[1][l] * n1;
    bf.w2[l] = wtilde.col[2][l] * n2;
    bf.wc[l] = wtilde.col[0][l] * theta + bf.w1[l] + bf.w2[l];
  }
  return bf;
}

}  // namespace sbrsma
