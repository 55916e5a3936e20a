#include "sbrsma/linklevel.hpp"

#include <algorithm>
#include <cmath>

namespace sbrsma {

void PowerSplit::validate() const {
  for (double a : {alpha_c, alpha_1, alpha_2})
    if (!(a > 0.0) || !(a < 1.0))
      throw std::invalid_argument("power fractions must lie in (0,1)");
  if (std::abs(alpha_c + alpha_1 + alpha_2 - 1.0) > 1e-12)
    throw std::invalid_argument("power fractions must sum to 1");
}

void RateTargets::refresh() {
  gbar_c = std::exp2(rc) - 1.0;
  gbar_1 = std::exp2(r1) - 1.0;
  gbar_2 = std::exp2(r2) - 1.0;
  gbar_b = std::exp2(rb) - 1.0;
}

void RateTargets::validate() const {
  for (double r : {rc, r1, r2, rb})
    if (!(r > 0.0)) throw std::invalid_argument("rate targets must be positive");
}

void BackscatterParams::validate() const {
  if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("eta must be in (0,1]");
  if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("delta must be in (0,1]");
  if (!(psi > 0.0)) throw std::invalid_argument("psi must be positive");
}

SinrTriple general_sinrs(const ChannelRealization& ch, const BeamformerSet& bf,
                         const PowerSplit& ps, const BackscatterParams& bp, int user) {
  const cvec& hk = user == 1 ? ch.h1 : ch.h2;
  const cvec& wk = bf.w_k(user);
  const cvec& wj = bf.w_k(3 - user);
  const double alpha_j = ps.alpha_k(3 - user);

  const double v_c = ps.alpha_c * std::norm(dot(hk, bf.wc));
  const double v_k = ps.alpha_k(user) * std::norm(dot(hk, wk));
  const double v_j = alpha_j * std::norm(dot(hk, wj));
  const double v_0k = ps.alpha_c * std::norm(dot(ch.h0, bf.wc)) +
                      ps.alpha_1 * std::norm(dot(ch.h0, bf.w1)) +
                      ps.alpha_2 * std::norm(dot(ch.h0, bf.w2));

  const double g_sq = std::norm(ch.g_k(user));
  const double casc = bp.eta * bp.delta * v_0k * g_sq;
  const double psi = bp.psi;

  SinrTriple out;
  out.gamma_c = psi * v_c / (psi * (v_k + v_j + casc) + 1.0);
  out.gamma_k = psi * v_k / (psi * (v_j + casc) + 1.0);
  out.gamma_b = psi * casc / (psi * v_j + 1.0);
  return out;
}

SinrTriple simplified_sinrs(double tau_k, double theta_sq, double g_abs_sq,
                            const PowerSplit& ps, const BackscatterParams& bp, int user) {
  const double psi = bp.psi;
  const double casc = bp.eta * bp.delta * psi * theta_sq * g_abs_sq;
  SinrTriple out;
  out.gamma_c = ps.alpha_c * psi * tau_k / (ps.alpha_k(user) * psi * tau_k + casc + 1.0);
  out.gamma_k = ps.alpha_k(user) * psi * tau_k / (casc + 1.0);
  out.gamma_b = casc;
  return out;
}

double rho_ck(const PowerSplit& ps, const RateTargets& rt, int user) {
  return (ps.alpha_c - rt.gbar_c * ps.alpha_k(user)) / rt.gbar_c;
}

double rho_k(const PowerSplit& ps, const RateTargets& rt, int user) {
  return ps.alpha_k(user) / rt.gbar_k(user);
}

double pi_k(const PowerSplit& ps, const RateTargets& rt, int user) {
  const double rc = rho_ck(ps, rt, user);
  return std::max(1.0 / rho_k(ps, rt, user), 1.0 / rc);
}

DeltaInterval delta_range(double tau_1, double tau_2, double theta_sq, double g1_sq,
                          double g2_sq, const PowerSplit& ps, const RateTargets& rt,
                          double eta, double psi) {
  DeltaInterval iv;
  const double tau[2] = {tau_1, tau_2};
  const double g_sq[2] = {g1_sq, g2_sq};
  double lo = 0.0;
  double hi = 1.0;
  for (int user = 1; user <= 2; ++user) {
    const double denom = eta * psi * theta_sq * g_sq[user - 1];
    if (!(denom > 0.0)) return iv;  // dead backscatter cascade: outage, not an error
    lo = std::max(lo, rt.gbar_b / denom);
    const double rc = rho_ck(ps, rt, user);
    if (rc <= 0.0) return iv;  // common stream statically undecodable
    const double num_c = rc * psi * tau[user - 1] - 1.0;
    const double num_k = rho_k(ps, rt, user) * psi * tau[user - 1] - 1.0;
    hi = std::min(hi, std::min(num_c, num_k) / denom);
  }
  iv.lo = lo;
  iv.hi = hi;
  iv.feasible = lo < hi;
  return iv;
}

bool sic_outage_indicator(const SinrTriple& user1, const SinrTriple& user2,
                          const RateTargets& rt) {
  const bool ok = user1.gamma_c > rt.gbar_c && user1.gamma_k > rt.gbar_1 &&
                  user1.gamma_b > rt.gbar_b && user2.gamma_c > rt.gbar_c &&
                  user2.gamma_k > rt.gbar_2 && user2.gamma_b > rt.gbar_b;
  return !ok;
}

double pick_delta(const DeltaInterval& iv, DeltaPolicy policy, double eps) {
  if (!iv.feasible) throw std::runtime_error("pick_delta: infeasible interval (outage)");
  double d;
  switch (policy) {
    case DeltaPolicy::Midpoint: d = 0.5 * (iv.lo + iv.hi); break;
    case DeltaPolicy::LoPlusEps: d = iv.lo + eps; break;
    case DeltaPolicy::HiMinusEps: d = iv.hi - eps; break;
    default: d = 0.5 * (iv.lo + iv.hi);
  }
  if (!(d > iv.lo) || !(d < iv.hi)) d = 0.5 * (iv.lo + iv.hi);
  return d;
}

}  // namespace sbrsma
