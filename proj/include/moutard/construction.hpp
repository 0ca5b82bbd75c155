#pragma once

#include <optional>
#include <string>
#include <utility>

#include "moutard/ratfun.hpp"
#include "moutard/tripoly.hpp"

namespace moutard {

/// Holomorphic polynomial p(z) generating the harmonic field ω = p + p̄.
class HarmonicSeed {
 public:
  /// Throws NotHolomorphic if p contains w or t.
  explicit HarmonicSeed(TriPoly p);
  const TriPoly& p() const { return p_; }

 private:
  TriPoly p_;
};

/// ω = p + σ(p), a σ-fixed (real) harmonic polynomial.
TriPoly harmonic_from_holomorphic(const HarmonicSeed& seed);

/// B = (p₁σ(p₂) − p₂σ(p₁)) + S − σ(S) with S = ∫(p₁′p₂ − p₁p₂′)dz taken with
/// zero constant term. B is σ-antifixed, so i·B is real. p₁, p₂ may carry t.
TriPoly moutard_bracket(const TriPoly& p1, const TriPoly& p2);

/// Denominator-cleared θ₁: τ = ω₁θ₁ = i·B + C.
TriPoly moutard_tau(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C);

/// θ₁ = (i·B + C)/ω₁, the Moutard image of ω₂ under the step defined by ω₁.
/// Throws DegenerateSeed when ω₁ ≡ 0.
RatFun moutard_theta(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C);

struct MoutardResult {
  TriPoly tau;
  RatFun u;     ///< −Δ + u convention: u = −8·∂∂̄ log τ.
  RatFun psi1;  ///< ω₁/τ = 1/θ₁
  RatFun psi2;  ///< −ω₂/τ = 1/θ₂
  Rational C;
};

/// Two Moutard steps from u₀ = 0: first by ω₁, then by θ₁.
/// Throws DegenerateSeed or ZeroTau.
MoutardResult two_step_construct(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C);

/// (−4∂∂̄ + u)ψ as an exact RatFun.
RatFun kernel_residual(const RatFun& u, const RatFun& psi);
/// True iff kernel_residual(u, psi) is the zero RatFun.
bool verify_kernel(const RatFun& u, const RatFun& psi);

/// Least-squares slope of log|f| against log r over n_rays directions at
/// angles 2πk/n_rays + 0.1, averaged over rays. Throws PoleError.
double estimate_decay(const RatFun& f, double r_min, double r_max, int n_rays = 8);

/// Result of matching τ(C) = i·B + C against a target polynomial.
struct ConstantFit {
  Rational C;
  GaussianRational scale;  ///< τ = scale · target
};

/// Finds the integration constant C making τ an exact scalar multiple of
/// `target`. Throws FitError when no C gives exact proportionality.
ConstantFit fit_constant(const HarmonicSeed& p1, const HarmonicSeed& p2, const TriPoly& target);

struct NonvanishingReport {
  int sign = 1;                      ///< τ was multiplied by this before the checks
  double leading_form_min = 0.0;     ///< min of the top-degree form on the unit circle
  bool leading_form_positive = false;
  double radius = 0.0;               ///< outside this disk the leading form dominates
  double grid_min = 0.0;             ///< refined minimum of sign·τ over [−R, R]²
  double argmin_x = 0.0;
  double argmin_y = 0.0;
  bool certified = false;
  std::optional<std::pair<double, double>> zero;  ///< a point of the real zero set
  std::string verdict;
};

/// Heuristic certificate that a real (σ-fixed, t-free) τ has no real zeros:
/// leading-form positivity on 10⁴ circle samples plus dense-grid
/// minimization on the disk where lower-order terms can compete.
NonvanishingReport certify_nonvanishing(const TriPoly& tau, int resolution = 401);

}  // namespace moutard
