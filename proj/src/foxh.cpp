#include "sbrsma/foxh.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "sbrsma/cgamma.hpp"

namespace sbrsma {
namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kInf = std::numeric_limits<double>::infinity();

// log of the Mellin-Barnes kernel chi(s) (any branch).
cplx kernel_log(const FoxHSpec& spec, cplx s) {
  cplx acc = 0.0;
  for (int j = 0; j < static_cast<int>(spec.lower.size()); ++j) {
    const auto& [b, B] = spec.lower[j];
    if (j < spec.m)
      acc += log_gamma(b + B * s);
    else
      acc -= log_gamma(1.0 - b - B * s);
  }
  for (int i = 0; i < static_cast<int>(spec.upper.size()); ++i) {
    const auto& [a, A] = spec.upper[i];
    if (i < spec.n)
      acc += log_gamma(1.0 - a - A * s);
    else
      acc -= log_gamma(a + A * s);
  }
  return acc;
}

// log |chi(sigma)| - sigma log z on the real axis, for abscissa selection.
double real_log_magnitude(const FoxHSpec& spec, double sigma, double log_z) {
  double acc = -sigma * log_z;
  for (int j = 0; j < static_cast<int>(spec.lower.size()); ++j) {
    const auto& [b, B] = spec.lower[j];
    acc += (j < spec.m) ? std::lgamma(b + B * sigma) : -std::lgamma(1.0 - b - B * sigma);
  }
  for (int i = 0; i < static_cast<int>(spec.upper.size()); ++i) {
    const auto& [a, A] = spec.upper[i];
    acc += (i < spec.n) ? std::lgamma(1.0 - a - A * sigma) : -std::lgamma(a + A * sigma);
  }
  return acc;
}

bool near_nonpositive_integer(double u) {
  return u < 0.5 && std::abs(u - std::round(u)) < 1e-9;
}

// Numerator Gamma poles must stay off the contour line.
void check_contour_clear(const FoxHSpec& spec, double sigma) {
  for (int j = 0; j < spec.m; ++j)
    if (near_nonpositive_integer(spec.lower[j].first + spec.lower[j].second * sigma))
      throw FoxHContourError("gamma pole on the contour at abscissa " + std::to_string(sigma) +
                             "; shift the abscissa by ~0.1");
  for (int i = 0; i < spec.n; ++i)
    if (near_nonpositive_integer(1.0 - spec.upper[i].first - spec.upper[i].second * sigma))
      throw FoxHContourError("gamma pole on the contour at abscissa " + std::to_string(sigma) +
                             "; shift the abscissa by ~0.1");
}

// Abscissa choice: the magnitude-minimizing point of the admissible strip.
// For one-sided kernels this tracks the Mellin saddle, which is what keeps
// extreme arguments (z far from 1) well conditioned.
double auto_abscissa(const FoxHSpec& spec, double log_z) {
  const auto [left, right] = spec.contour_strip();
  const bool all_numerator =
      spec.m == static_cast<int>(spec.lower.size()) && spec.n == static_cast<int>(spec.upper.size());
  if (!all_numerator) {
    // Denominator factors make the magnitude profile non-convex; fall back to
    // a fixed interior point.
    if (std::isfinite(left) && std::isfinite(right)) return 0.5 * (left + right);
    if (std::isfinite(left)) return left + 1.0;
    return right - 1.0;
  }

  double lo, hi;
  if (std::isfinite(left) && std::isfinite(right)) {
    const double w = right - left;
    lo = left + 1e-4 * w;
    hi = right - 1e-4 * w;
  } else if (std::isfinite(left)) {
    const double scale = std::min(1e4, std::max(16.0, 2.0 * std::exp(std::max(0.0, log_z))));
    lo = left + 1e-3;
    hi = left + scale;
  } else {
    const double scale = std::min(1e4, std::max(16.0, 2.0 * std::exp(std::max(0.0, -log_z))));
    hi = right - 1e-3;
    lo = right - scale;
  }

  // Coarse scan, then golden-section refinement (the profile is convex for
  // all-numerator kernels).
  const int kScan = 96;
  double best_x = 0.5 * (lo + hi), best_g = kInf;
  for (int i = 0; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double g = real_log_magnitude(spec, x, log_z);
    if (std::isfinite(g) && g < best_g) {
      best_g = g;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - (hi - lo) / kScan);
  double b = std::min(hi, best_x + (hi - lo) / kScan);
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = real_log_magnitude(spec, x1, log_z);
  double f2 = real_log_magnitude(spec, x2, log_z);
  for (int it = 0; it < 60 && (b - a) > 1e-10 * (1.0 + std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = real_log_magnitude(spec, x1, log_z);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = real_log_magnitude(spec, x2, log_z);
    }
  }
  return 0.5 * (a + b);
}

struct Panelization {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// 16-point Gauss-Legendre abscissas/weights on (-1,1), positive half.
constexpr double kGlX[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                            0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                            0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

Panelization gl_panels(double t_max, int min_nodes);

}  // namespace

void FoxHSpec::validate() const {
  if (m < 0 || m > static_cast<int>(lower.size()))
    throw std::invalid_argument("foxh: m out of range");
  if (n < 0 || n > static_cast<int>(upper.size()))
    throw std::invalid_argument("foxh: n out of range");
  if (m + n == 0) throw std::invalid_argument("foxh: kernel needs a numerator gamma");
  for (const auto& [a, A] : upper)
    if (!(A > 0.0)) throw std::invalid_argument("foxh: coefficients A_i must be positive");
  for (const auto& [b, B] : lower)
    if (!(B > 0.0)) throw std::invalid_argument("foxh: coefficients B_j must be positive");
}

std::pair<double, double> FoxHSpec::contour_strip() const {
  double left = -kInf, right = kInf;
  for (int j = 0; j < m; ++j)
    left = std::max(left, -lower[j].first / lower[j].second);
  for (int i = 0; i < n; ++i)
    right = std::min(right, (1.0 - upper[i].first) / upper[i].second);
  return {left, right};
}

void ContourSettings::validate() const {
  if (!(half_length > 0.0)) throw std::invalid_argument("half_length must be positive");
  if (nodes < 64) throw std::invalid_argument("nodes must be >= 64");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
}

void BivariateFoxHSpec::validate() const {
  inner_s.validate();
  inner_t.validate();
}

namespace {

Panelization gl_panels(double t_max, int min_nodes) {
  const int panels = std::max(4, (min_nodes + 15) / 16);
  Panelization p;
  p.nodes.reserve(panels * 16);
  p.weights.reserve(panels * 16);
  const double width = t_max / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * width;
    const double half = 0.5 * width;
    for (int i = 7; i >= 0; --i) {
      p.nodes.push_back(mid - half * kGlX[i]);
      p.weights.push_back(half * kGlW[i]);
    }
    for (int i = 0; i < 8; ++i) {
      p.nodes.push_back(mid + half * kGlX[i]);
      p.weights.push_back(half * kGlW[i]);
    }
  }
  return p;
}

// Settle the truncation where the kernel magnitude has dropped ~40 e-folds
// below its contour-center value: grow if the configured half-length is not
// enough, shrink it when the gamma decay gets there much sooner (the node
// budget scales with the truncation, so this matters).
double settle_half_length(double t0, double center_mag,
                          const std::function<double(double)>& mag_at) {
  double t = t0;
  for (int it = 0; it < 64 && mag_at(t) >= center_mag - 40.0; ++it) {
    t *= 1.4;
    if (t > 2e5)
      throw FoxHAccuracyError("contour kernel does not decay; truncation not reachable");
  }
  while (t > 4.0 && mag_at(t / 1.4) < center_mag - 42.0) t /= 1.4;
  return t;
}

int oscillation_nodes(double t_max, double log_z) {
  const double rate = std::abs(log_z) + std::log(2.0 + t_max);
  return static_cast<int>(std::ceil(1.2 * t_max * rate));
}

double integrate_uni(const FoxHSpec& spec, double sigma, double log_z, double t_max,
                     int node_count) {
  const Panelization p = gl_panels(t_max, node_count);
  // Peak magnitude rescaling keeps exp() in range for saddle-sized kernels.
  const double peak = real_log_magnitude(spec, sigma, log_z);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const cplx s(sigma, p.nodes[i]);
    const cplx lk = kernel_log(spec, s) - s * log_z - peak;
    acc += p.weights[i] * std::exp(lk).real();
  }
  // Hermitian symmetry: full line = 2 Re(half line); 1/(2 pi) overall.
  return std::exp(peak) * acc / kPi;
}

}  // namespace

FoxHResult foxh_uni(const FoxHSpec& spec, double z, const ContourSettings& cs) {
  spec.validate();
  cs.validate();
  if (!(z > 0.0)) throw std::domain_error("foxh_uni requires z > 0");
  const double log_z = std::log(z);

  const auto [left, right] = spec.contour_strip();
  if (left >= right)
    throw FoxHContourError("empty pole-separating strip for this parameter set");

  double sigma = cs.abscissa;
  if (std::isnan(sigma)) {
    sigma = auto_abscissa(spec, log_z);
  } else if (sigma <= left || sigma >= right) {
    throw FoxHContourError("abscissa outside the pole-separating strip (" +
                           std::to_string(left) + ", " + std::to_string(right) + ")");
  }
  check_contour_clear(spec, sigma);

  const double center = real_log_magnitude(spec, sigma, log_z);
  auto mag_at = std::function<double(double)>([&](double t) {
    const cplx s(sigma, t);
    return (kernel_log(spec, s) - s * log_z).real();
  });
  const double t_max = settle_half_length(cs.half_length, center, mag_at);

  int nodes = std::max(cs.nodes, oscillation_nodes(t_max, log_z));
  double prev = integrate_uni(spec, sigma, log_z, t_max, nodes);
  for (int r = 0; r <= cs.max_doublings; ++r) {
    nodes *= 2;
    const double cur = integrate_uni(spec, sigma, log_z, t_max, nodes);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    const double rel = std::abs(cur - prev) / scale;
    if (rel <= cs.rel_tol) return {cur, rel};
    prev = cur;
  }
  throw FoxHAccuracyError("node-doubling did not converge to rel_tol=" +
                          std::to_string(cs.rel_tol));
}

FoxHResult foxh_bivariate(const BivariateFoxHSpec& spec, double x, double y,
                          const ContourSettings& cs) {
  spec.validate();
  cs.validate();
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("foxh_bivariate requires x,y > 0");
  const double log_x = std::log(x);
  const double log_y = std::log(y);

  const auto [s_left, s_right] = spec.inner_s.contour_strip();
  const auto [t_left, t_right] = spec.inner_t.contour_strip();
  if (s_left >= s_right || t_left >= t_right)
    throw FoxHContourError("empty pole-separating strip in an inner block");

  double sigma_s = std::isnan(cs.abscissa) ? auto_abscissa(spec.inner_s, log_x) : cs.abscissa;
  if (sigma_s <= s_left || sigma_s >= s_right)
    throw FoxHContourError("s-abscissa outside the inner strip");
  double sigma_t = auto_abscissa(spec.inner_t, log_y);
  // Outer factor Gamma(1 - a - s - t): keep its argument's real part >= 0.5
  // so its pole lines stay right of the contour pair.
  const double budget = 1.0 - spec.outer_a - 0.5;
  if (sigma_s + sigma_t > budget) {
    if (std::isnan(cs.abscissa)) {
      // The budget binds. Splitting it badly can cost tens of e-folds of
      // cancellation on one axis (z^{-sigma} against an off-saddle contour),
      // so minimize the joint magnitude along sigma_s + sigma_t = budget.
      double lo = s_left, hi = s_right;
      if (std::isfinite(t_right)) lo = std::max(lo, budget - t_right);
      if (std::isfinite(t_left)) hi = std::min(hi, budget - t_left);
      if (!(lo < hi))
        throw FoxHContourError("no admissible abscissa pair under the outer pole constraint");
      const double pad = 1e-3 * std::min(1.0, hi - lo);
      auto joint = [&](double ss) {
        return real_log_magnitude(spec.inner_s, ss, log_x) +
               real_log_magnitude(spec.inner_t, budget - ss, log_y);
      };
      double best_x = 0.5 * (lo + hi), best_g = kInf;
      for (int i = 0; i <= 96; ++i) {
        const double x0 = lo + pad + (hi - lo - 2 * pad) * i / 96.0;
        const double g = joint(x0);
        if (std::isfinite(g) && g < best_g) {
          best_g = g;
          best_x = x0;
        }
      }
      double a = std::max(lo + pad, best_x - (hi - lo) / 96.0);
      double b = std::min(hi - pad, best_x + (hi - lo) / 96.0);
      for (int it = 0; it < 60 && (b - a) > 1e-9; ++it) {
        const double x1 = b - 0.6180339887498949 * (b - a);
        const double x2 = a + 0.6180339887498949 * (b - a);
        if (joint(x1) < joint(x2))
          b = x2;
        else
          a = x1;
      }
      sigma_s = 0.5 * (a + b);
    }
    sigma_t = budget - sigma_s;
    if (sigma_t <= t_left || sigma_t >= t_right)
      throw FoxHContourError("no admissible t-abscissa under the outer pole constraint");
  }
  check_contour_clear(spec.inner_s, sigma_s);
  check_contour_clear(spec.inner_t, sigma_t);
  const double outer_center = 1.0 - spec.outer_a - sigma_s - sigma_t;
  if (near_nonpositive_integer(outer_center))
    throw FoxHContourError("outer gamma pole on the contour pair; shift an abscissa");

  // Per-axis truncation with the other axis held at its contour center.
  const double center_s = real_log_magnitude(spec.inner_s, sigma_s, log_x) +
                          std::lgamma(outer_center);
  const double center_t = real_log_magnitude(spec.inner_t, sigma_t, log_y) +
                          std::lgamma(outer_center);
  auto mag_s = std::function<double(double)>([&](double t) {
    const cplx s(sigma_s, t);
    return (kernel_log(spec.inner_s, s) - s * log_x +
            log_gamma(1.0 - spec.outer_a - s - sigma_t)).real();
  });
  auto mag_t = std::function<double(double)>([&](double t) {
    const cplx tt(sigma_t, t);
    return (kernel_log(spec.inner_t, tt) - tt * log_y +
            log_gamma(1.0 - spec.outer_a - sigma_s - tt)).real();
  });
  const double tmax_s = settle_half_length(cs.half_length, center_s, mag_s);
  const double tmax_t = settle_half_length(cs.half_length, center_t, mag_t);

  const int base_s = std::max(cs.nodes / 2, oscillation_nodes(tmax_s, log_x));
  const int base_t = std::max(cs.nodes / 2, oscillation_nodes(tmax_t, log_y));

  auto evaluate = [&](int ns, int nt) {
    const Panelization ps = gl_panels(tmax_s, ns);
    const Panelization pt = gl_panels(tmax_t, nt);
    const double peak_s = real_log_magnitude(spec.inner_s, sigma_s, log_x);
    const double peak_t = real_log_magnitude(spec.inner_t, sigma_t, log_y);
    const double peak_c = std::lgamma(outer_center);

    // Factor A runs over the full s-line; B over the upper half t-line; the
    // missing half is recovered from Hermitian symmetry of the pair.
    std::vector<cplx> a_vals(2 * ps.nodes.size());
    std::vector<cplx> s_pts(2 * ps.nodes.size());
    for (std::size_t i = 0; i < ps.nodes.size(); ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        const double ti = sign ? -ps.nodes[i] : ps.nodes[i];
        const cplx s(sigma_s, ti);
        const std::size_t idx = 2 * i + sign;
        s_pts[idx] = s;
        a_vals[idx] = std::exp(kernel_log(spec.inner_s, s) - s * log_x - peak_s) * ps.weights[i];
      }
    }
    std::vector<cplx> b_vals(pt.nodes.size());
    std::vector<cplx> t_pts(pt.nodes.size());
    for (std::size_t j = 0; j < pt.nodes.size(); ++j) {
      const cplx t(sigma_t, pt.nodes[j]);
      t_pts[j] = t;
      b_vals[j] = std::exp(kernel_log(spec.inner_t, t) - t * log_y - peak_t) * pt.weights[j];
    }

    cplx total = 0.0;
    for (std::size_t j = 0; j < t_pts.size(); ++j) {
      cplx row = 0.0;
      for (std::size_t i = 0; i < s_pts.size(); ++i) {
        const cplx g = std::exp(log_gamma(1.0 - spec.outer_a - s_pts[i] - t_pts[j]) - peak_c);
        row += a_vals[i] * g;
      }
      total += row * b_vals[j];
    }
    // 2 Re for the mirrored half-plane, 1/(2 pi)^2 overall, exp(peaks) undoes
    // the rescaling.
    return std::exp(peak_s + peak_t + peak_c) * total.real() / (2.0 * kPi * kPi);
  };

  int ns = base_s, nt = base_t;
  double prev = evaluate(ns, nt);
  for (int r = 0; r <= cs.max_doublings; ++r) {
    ns *= 2;
    nt *= 2;
    const double cur = evaluate(ns, nt);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    const double rel = std::abs(cur - prev) / scale;
    if (rel <= cs.rel_tol) return {cur, rel};
    prev = cur;
  }
  throw FoxHAccuracyError("bivariate node-doubling did not converge");
}

}  // namespace sbrsma
