#pragma once

#include <stdexcept>

#include "sbrsma/foxh.hpp"
#include "sbrsma/scenario.hpp"

namespace sbrsma {

// Scenario whose static parameters already violate the common-stream
// threshold (rho_ck <= 0): the outage probability is 1 for every channel.
struct StaticInfeasibilityError : std::runtime_error {
  explicit StaticInfeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

// Per-user constants of the closed-form outage expression.
struct TheoremConstants {
  double beta0 = 0.0;    // gbar_b lambda0 / (eta Psi)
  double beta_k = 0.0;   // lambda_k pi_k gbar_b / (Psi Omega_k)
  double beta_jk = 0.0;  // Omega_j + Omega_k
  double chi_k = 0.0;    // beta_k Omega_k (gbar_b + 1) / gbar_b
  double pi_k = 0.0;
  double rho_ck = 0.0;
  double rho_k = 0.0;
};

bool statically_feasible(const ScenarioConfig& cfg, int user);
TheoremConstants theorem_constants(const ScenarioConfig& cfg, int user);

// Xi(m,n,q) = Int_0^inf x^{1-m} (x+beta_k)^{-(n-q+1)} exp(-beta0/x - beta_jk x) dx.
// Direct path: trapezoid on the log axis (the integrand decays doubly
// exponentially both ways after x = e^t), refined until stable.
double xi_quadrature(int m, int n, int q, double beta0, double beta_k, double beta_jk,
                     double abs_tol = 1e-10, double rel_tol = 1e-8);

// Same quantity through the bivariate Fox-H block of the closed form, with
// arguments 1/(beta_k beta_jk) and 1/(beta0 beta_jk).
double xi_foxh(int m, int n, int q, double beta0, double beta_k, double beta_jk,
               const ContourSettings& cs = {});

// The Eq.-17-shaped bivariate spec for given (m, n, q).
BivariateFoxHSpec sop_bivariate_spec(int m, int n, int q);

enum class XiPath { Quadrature, FoxH };

// Triple sum over (m, n, q) of the per-branch joint probability, user k
// holding the larger backscatter gain and user j the smaller.
double i1(const ScenarioConfig& cfg, int user_k, int user_j, XiPath path = XiPath::Quadrature,
          const ContourSettings& cs = {});

// P[tau_j >= (gbar_b + 1) pi_j / Psi], the independent factor of each branch.
double i2(const ScenarioConfig& cfg, int user_j);

// Closed-form symbiotic outage probability,
//   1 - I1(k=2,j=1) I2(j=1) - I1(k=1,j=2) I2(j=2),
// clipped to [0,1]; statically infeasible scenarios return exactly 1.
double sop_closed_form(const ScenarioConfig& cfg, XiPath path = XiPath::Quadrature,
                       const ContourSettings& cs = {});

}  // namespace sbrsma
