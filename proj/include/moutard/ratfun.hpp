#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moutard/tripoly.hpp"

namespace moutard {

/// Quotient num / den of TriPolys.
///
/// The denominator is held as a product of powers of normalized factors
/// (leading coefficient 1) so that repeated differentiation only bumps
/// exponents instead of squaring the denominator. No polynomial GCD is ever
/// taken: two RatFuns are equal iff the numerator of their difference is the
/// zero polynomial.
class RatFun {
 public:
  struct Factor {
    TriPoly base;
    unsigned power;
  };

  RatFun() = default;
  RatFun(TriPoly num);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den ≡ 0.
  RatFun(TriPoly num, TriPoly den);
  RatFun(TriPoly num, std::vector<Factor> factors);

  const TriPoly& num() const { return num_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Expanded denominator ∏ base^power.
  TriPoly den() const;

  /// True iff the numerator is identically zero.
  bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  /// Quotient-rule derivative.
  RatFun derive(Var v, unsigned order = 1) const;
  /// σ applied to numerator and denominator.
  RatFun conjugate() const;

  std::complex<double> evaluate(std::complex<double> z, std::complex<double> w, double t) const;

  /// Human-readable "(num) / (den)".
  std::string to_string() const;

 private:
  void add_factor(TriPoly base, unsigned power);
  TriPoly num_;
  std::vector<Factor> factors_;
};

/// Exact equality by cross-multiplication.
bool equal(const RatFun& a, const RatFun& b);

/// Equality up to one nonzero constant scalar: a = c·b. Returns the scalar
/// when it exists.
std::optional<GaussianRational> proportional(const RatFun& a, const RatFun& b);

/// ∂∂̄ log τ = (τ·τ_{zw} − τ_z·τ_w)/τ². Throws ZeroTau when τ ≡ 0.
RatFun log_laplacian_ratio(const TriPoly& tau);

/// ∂² log τ = (τ·τ_{zz} − τ_z²)/τ². Throws ZeroTau when τ ≡ 0.
RatFun log_second_z_ratio(const TriPoly& tau);

/// Numerical evaluation of a field at the physical point (x, y, t).
/// Throws PoleError when |den| ≤ 1e-12 of the denominator's magnitude scale.
std::complex<double> evaluate_at(const RatFun& f, double x, double y, double t = 0.0);
std::complex<double> evaluate_at(const TriPoly& p, double x, double y, double t = 0.0);

}  // namespace moutard
