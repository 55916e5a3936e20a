#include "sbrsma/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace sbrsma {
namespace {

// exp underflows past ~745 e-folds; integration windows are cut there.
constexpr double kExpCut = 760.0;

double factorial(int n) { return std::tgamma(static_cast<double>(n + 1)); }

// log(e^t + c) without overflow on either side.
double log_exp_plus(double t, double c) {
  const double lc = std::log(c);
  if (t > lc) return t + std::log1p(c * std::exp(-t));
  return lc + std::log1p(std::exp(t - lc));
}

}  // namespace

bool statically_feasible(const ScenarioConfig& cfg, int user) {
  return rho_ck(cfg.split, cfg.rates, user) > 0.0;
}

TheoremConstants theorem_constants(const ScenarioConfig& cfg, int user) {
  cfg.validate();
  TheoremConstants c;
  c.rho_ck = rho_ck(cfg.split, cfg.rates, user);
  if (c.rho_ck <= 0.0)
    throw StaticInfeasibilityError("alpha_c <= gbar_c * alpha_k: common stream undecodable");
  c.rho_k = rho_k(cfg.split, cfg.rates, user);
  c.pi_k = std::max(1.0 / c.rho_k, 1.0 / c.rho_ck);
  const double gb = cfg.rates.gbar_b;
  const double omega_k = cfg.fading.omega_k(user);
  const double omega_j = cfg.fading.omega_k(3 - user);
  c.beta0 = gb * cfg.fading.lambda0 / (cfg.eta * cfg.psi);
  c.beta_k = cfg.fading.lambda_k(user) * c.pi_k * gb / (cfg.psi * omega_k);
  c.beta_jk = omega_j + omega_k;
  c.chi_k = c.beta_k * omega_k * (gb + 1.0) / gb;
  return c;
}

double xi_quadrature(int m, int n, int q, double beta0, double beta_k, double beta_jk,
                     double abs_tol, double rel_tol) {
  if (q < 0 || q > n || m < 0 || n < 0) throw std::invalid_argument("xi: indices out of range");
  if (!(beta0 > 0.0) || !(beta_k > 0.0) || !(beta_jk > 0.0))
    throw std::invalid_argument("xi: constants must be positive");
  const int big_m = n - q + 1;
  const double t_lo = std::log(beta0 / kExpCut);
  const double t_hi = std::log(kExpCut / beta_jk);
  if (t_lo >= t_hi) return 0.0;  // integrand below underflow everywhere

  auto pass = [&](int intervals) {
    const double h = (t_hi - t_lo) / intervals;
    std::vector<double> lg(intervals + 1);
    double peak = -1e308;
    for (int i = 0; i <= intervals; ++i) {
      const double t = t_lo + h * i;
      const double x = std::exp(t);
      lg[i] = (2.0 - m) * t - big_m * log_exp_plus(t, beta_k) - beta0 / x - beta_jk * x;
      peak = std::max(peak, lg[i]);
    }
    double acc = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
      acc += w * std::exp(lg[i] - peak);
    }
    return h * std::exp(peak) * acc;
  };

  int intervals = 256;
  double prev = pass(intervals);
  for (int r = 0; r < 12; ++r) {
    intervals *= 2;
    const double cur = pass(intervals);
    if (std::abs(cur - prev) <= std::max(abs_tol, rel_tol * std::abs(cur))) return cur;
    prev = cur;
  }
  throw FoxHAccuracyError("xi_quadrature did not converge");
}

BivariateFoxHSpec sop_bivariate_spec(int m, int n, int q) {
  BivariateFoxHSpec spec;
  spec.outer_a = static_cast<double>(m - 1);
  spec.inner_s.upper = {{static_cast<double>(q - n), 1.0}};
  spec.inner_s.lower = {{0.0, 1.0}};
  spec.inner_s.m = 1;
  spec.inner_s.n = 1;
  spec.inner_t.upper = {{1.0, 1.0}};
  spec.inner_t.m = 0;
  spec.inner_t.n = 1;
  return spec;
}

double xi_foxh(int m, int n, int q, double beta0, double beta_k, double beta_jk,
               const ContourSettings& cs) {
  if (q < 0 || q > n || m < 0 || n < 0) throw std::invalid_argument("xi: indices out of range");
  if (!(beta0 > 0.0) || !(beta_k > 0.0) || !(beta_jk > 0.0))
    throw std::invalid_argument("xi: constants must be positive");
  const int big_m = n - q + 1;
  const BivariateFoxHSpec spec = sop_bivariate_spec(m, n, q);
  const FoxHResult h = foxh_bivariate(spec, 1.0 / (beta_k * beta_jk), 1.0 / (beta0 * beta_jk), cs);
  return std::pow(beta_k, -big_m) * std::pow(beta_jk, m - 2.0) / factorial(big_m - 1) * h.value;
}

double i1(const ScenarioConfig& cfg, int user_k, int user_j, XiPath path,
          const ContourSettings& cs) {
  const TheoremConstants c = theorem_constants(cfg, user_k);
  const double omega_j = cfg.fading.omega_k(user_j);
  const double omega_k = cfg.fading.omega_k(user_k);
  const double gb = cfg.rates.gbar_b;
  const int antennas = cfg.antennas;
  const double exp_chi = std::exp(-c.chi_k);
  const double base_q = (gb + 1.0) * omega_k / gb;

  // Largest indices first plus compensated summation: the outer 1 - (...)
  // assembly is where cancellation would bite.
  double sum = 0.0, comp = 0.0;
  for (int m = antennas - 1; m >= 0; --m) {
    for (int n = antennas - 1; n >= 0; --n) {
      for (int q = n; q >= 0; --q) {
        const double coef = omega_j * std::pow(c.beta0, m) / (factorial(m) * factorial(q)) *
                            std::pow(c.beta_k, n) * std::pow(base_q, q) * exp_chi;
        const double xi = path == XiPath::Quadrature
                              ? xi_quadrature(m, n, q, c.beta0, c.beta_k, c.beta_jk)
                              : xi_foxh(m, n, q, c.beta0, c.beta_k, c.beta_jk, cs);
        const double term = coef * xi;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
    }
  }
  return sum;
}

double i2(const ScenarioConfig& cfg, int user_j) {
  const TheoremConstants c = theorem_constants(cfg, user_j);
  const double z = (cfg.rates.gbar_b + 1.0) * c.pi_k / cfg.psi;
  return tau_ccdf(z, cfg.antennas, cfg.fading.lambda_k(user_j));
}

double sop_closed_form(const ScenarioConfig& cfg, XiPath path, const ContourSettings& cs) {
  cfg.validate();
  if (!statically_feasible(cfg, 1) || !statically_feasible(cfg, 2)) return 1.0;
  const double phi_1 = i1(cfg, 2, 1, path, cs) * i2(cfg, 1);
  const double phi_2 = i1(cfg, 1, 2, path, cs) * i2(cfg, 2);
  const double sop = 1.0 - phi_1 - phi_2;
  if (sop < -1e-6 || sop > 1.0 + 1e-6)
    std::fprintf(stderr, "sop_closed_form: assembled value %.3e outside [0,1]\n", sop);
  return std::min(1.0, std::max(0.0, sop));
}

}  // namespace sbrsma
