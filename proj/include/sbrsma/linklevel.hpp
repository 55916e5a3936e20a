#pragma once

#include <stdexcept>

#include "sbrsma/beamforming.hpp"
#include "sbrsma/distributions.hpp"

namespace sbrsma {

// Power-allocation fractions for the common stream and the two private
// streams; must sum to one.
struct PowerSplit {
  double alpha_c = 0.5;
  double alpha_1 = 0.3;
  double alpha_2 = 0.2;

  double alpha_k(int user) const { return user == 1 ? alpha_1 : alpha_2; }
  void validate() const;
};

// Target rates (bps/Hz) and the decoding thresholds 2^R - 1 derived from
// them: common stream, per-user private streams, backscatter symbol.
struct RateTargets {
  double rc = 0.5, r1 = 1.0, r2 = 1.5, rb = 1.0;
  double gbar_c = 0.0, gbar_1 = 0.0, gbar_2 = 0.0, gbar_b = 0.0;

  RateTargets() { refresh(); }
  RateTargets(double rc_, double r1_, double r2_, double rb_)
      : rc(rc_), r1(r1_), r2(r2_), rb(rb_) {
    refresh();
  }
  void refresh();
  double gbar_k(int user) const { return user == 1 ? gbar_1 : gbar_2; }
  void validate() const;
};

// Backscatter efficiency, reflection coefficient and average SNR (linear).
struct BackscatterParams {
  double eta = 0.8;
  double delta = 0.5;
  double psi = 10.0;

  void validate() const;
};

// SINRs seen at one user for decoding the common stream, its private stream
// and the backscatter symbol.
struct SinrTriple {
  double gamma_c = 0.0;
  double gamma_k = 0.0;
  double gamma_b = 0.0;
};

// SINRs from the full quadratic forms with arbitrary weights. With the
// designed zero-forcing weights the cross terms vanish and these collapse to
// simplified_sinrs up to the alpha_c factor multiplying the backscatter
// cascade (the two paths are kept separate so that gap stays measurable).
SinrTriple general_sinrs(const ChannelRealization& ch, const BeamformerSet& bf,
                         const PowerSplit& ps, const BackscatterParams& bp, int user);

// Closed-form SINRs of the designed system: tau_k = ||h_k||^2, theta_sq the
// gain-control power, g_abs_sq = |g_k|^2.
SinrTriple simplified_sinrs(double tau_k, double theta_sq, double g_abs_sq,
                            const PowerSplit& ps, const BackscatterParams& bp, int user);

struct DeltaInterval {
  bool feasible = false;
  double lo = 0.0;  // largest backscatter-decoding lower bound over users
  double hi = 0.0;  // smallest rate-preserving upper bound, capped at 1
};

// Admissible reflection-coefficient range: for each user k the backscatter
// constraint demands delta > gbar_b / (eta Psi theta^2 |g_k|^2) while the
// common/private constraints demand delta < (rho Psi tau_k - 1) /
// (eta Psi theta^2 |g_k|^2) for rho in {rho_ck, rho_k}. Zero gains or
// nonpositive numerators make the block infeasible (an outage), never throw.
DeltaInterval delta_range(double tau_1, double tau_2, double theta_sq, double g1_sq,
                          double g2_sq, const PowerSplit& ps, const RateTargets& rt,
                          double eta, double psi);

/// True (outage) iff any of the six strict SIC inequalities fails.
bool sic_outage_indicator(const SinrTriple& user1, const SinrTriple& user2,
                          const RateTargets& rt);

enum class DeltaPolicy { Midpoint, LoPlusEps, HiMinusEps };

// A reflection coefficient strictly inside a feasible interval.
double pick_delta(const DeltaInterval& iv, DeltaPolicy policy = DeltaPolicy::Midpoint,
                  double eps = 1e-3);

// Static per-user constants of the threshold algebra.
double rho_ck(const PowerSplit& ps, const RateTargets& rt, int user);
double rho_k(const PowerSplit& ps, const RateTargets& rt, int user);
double pi_k(const PowerSplit& ps, const RateTargets& rt, int user);

}  // namespace sbrsma
