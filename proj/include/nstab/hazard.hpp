#pragma once

namespace nstab {

// Hazard function psi(x) = x^alpha * exp(eps * sin(2*pi*ln(x)/T + phase))
// with T = ln(1/p)/alpha, the one-harmonic solution of the scaling equation
//
//     psi(x) = psi(p^{1/alpha} x) / p   for all x > 0.
//
// Any solution is x^alpha * h(ln x) with h periodic of period T; the single
// harmonic is the smallest family that is genuinely log-periodic while
// staying closed-form, and eps = 0 recovers the pure power x^alpha.
//
// Monotonicity: d/dx psi >= 0 for all x iff |eps| <= ln(1/p)/(2*pi), since
// psi' = x^{alpha-1} h(ln x) [alpha + eps (2*pi/T) cos(.)] and
// 2*pi/T = 2*pi*alpha/ln(1/p). The constructor rejects eps outside the bound.
class PeriodicHazard {
 public:
  PeriodicHazard(double alpha, double p, double eps, double phase);

  double alpha() const { return alpha_; }
  double p() const { return p_; }
  double eps() const { return eps_; }
  double phase() const { return phase_; }
  double period() const { return period_; }

  static double eps_bound(double p);

  // psi(x), x > 0.
  double value(double x) const;
  // ln psi(x); preferred by survival-scale code paths.
  double log_value(double x) const;

  // The unique x > 0 with psi(x) = w, w > 0. Closed form when eps == 0,
  // otherwise bisection on the bracket [w^{1/alpha} p^{1/alpha},
  // w^{1/alpha} p^{-1/alpha}], valid because e^{-|eps|} <= h <= e^{|eps|}
  // pinches psi between scaled pure powers.
  double inverse(double w) const;

  // inverse(exp(log_w)) without forming exp(log_w); keeps survival-scale
  // inversions accurate when w is extreme.
  double inverse_log(double log_w) const;

 private:
  double alpha_;
  double p_;
  double eps_;
  double phase_;
  double period_;  // in ln x
};

}  // namespace nstab
