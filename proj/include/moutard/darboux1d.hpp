#pragma once

#include <string>
#include <vector>

#include "moutard/gaussian_rational.hpp"

namespace moutard {

/// Dense univariate polynomial in x; coeffs[k] multiplies x^k, no trailing zeros.
class Poly1D {
 public:
  Poly1D() = default;
  Poly1D(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Poly1D(long c) : Poly1D(GaussianRational(c)) {}  // NOLINT
  explicit Poly1D(std::vector<GaussianRational> coeffs);
  static Poly1D x() { return Poly1D(std::vector<GaussianRational>{0, 1}); }

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< −1 for zero

  Poly1D& operator+=(const Poly1D& o);
  Poly1D& operator-=(const Poly1D& o);
  friend Poly1D operator+(Poly1D a, const Poly1D& b) { return a += b; }
  friend Poly1D operator-(Poly1D a, const Poly1D& b) { return a -= b; }
  friend Poly1D operator*(const Poly1D& a, const Poly1D& b);
  Poly1D operator-() const;
  friend bool operator==(const Poly1D& a, const Poly1D& b) { return a.c_ == b.c_; }

  Poly1D derive() const;
  GaussianRational evaluate(const GaussianRational& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// num/den in x. Equality by cross-multiplication; no GCDs.
class RatFun1D {
 public:
  RatFun1D() = default;
  RatFun1D(Poly1D num);  // NOLINT(google-explicit-constructor)
  RatFun1D(long c) : RatFun1D(Poly1D(c)) {}  // NOLINT
  /// Throws std::domain_error when den ≡ 0.
  RatFun1D(Poly1D num, Poly1D den);

  const Poly1D& num() const { return num_; }
  const Poly1D& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun1D operator+(const RatFun1D& a, const RatFun1D& b);
  friend RatFun1D operator-(const RatFun1D& a, const RatFun1D& b);
  friend RatFun1D operator*(const RatFun1D& a, const RatFun1D& b);
  /// Throws std::domain_error on division by zero.
  friend RatFun1D operator/(const RatFun1D& a, const RatFun1D& b);
  RatFun1D operator-() const { return {-num_, den_}; }
  friend bool operator==(const RatFun1D& a, const RatFun1D& b) { return (a - b).is_zero(); }

  RatFun1D derive(unsigned order = 1) const;
  /// Throws PoleError when the denominator vanishes.
  GaussianRational evaluate(const GaussianRational& x) const;
  std::string to_string() const;

 private:
  void normalize();
  Poly1D num_;
  Poly1D den_{1};
};

/// (−d²/dx² + u)ψ.
RatFun1D schrodinger_1d(const RatFun1D& u, const RatFun1D& psi);

/// ũ = u − 2(log ω)″ = v² − v′ with v = ω′/ω. Throws NotInKernel when
/// (−d²/dx² + u)ω ≢ 0.
RatFun1D darboux_transform(const RatFun1D& u, const RatFun1D& omega);

/// Aφ = −φ′ + (ω′/ω)φ.
RatFun1D darboux_eigenmap(const RatFun1D& phi, const RatFun1D& omega);

/// The Adler–Moser polynomials θ₁ = x, θ₂ = x³ + τ₂,
/// θ₃ = x⁶ + 5τ₂x³ + τ₃x − 5τ₂². Throws Unsupported for n ∉ {1, 2, 3}.
Poly1D adler_moser_theta(int n, const Rational& tau2 = 0, const Rational& tau3 = 0);

/// uₙ = −2(log θₙ)″.
RatFun1D adler_moser_potential(int n, const Rational& tau2 = 0, const Rational& tau3 = 0);

/// f(x)·e^{κx} with f rational and κ a Gaussian rational.
struct ExpRat1D {
  RatFun1D f;
  GaussianRational kappa;

  ExpRat1D derive() const { return {f.derive() + f * RatFun1D(Poly1D(kappa)), kappa}; }
  friend ExpRat1D operator*(const ExpRat1D& a, const ExpRat1D& b) { return {a.f * b.f, a.kappa + b.kappa}; }
  friend ExpRat1D operator*(const RatFun1D& r, const ExpRat1D& a) { return {r * a.f, a.kappa}; }
  /// The logarithmic derivative f′/f + κ.
  RatFun1D log_derivative() const { return f.derive() / f + RatFun1D(Poly1D(kappa)); }
};

/// Exact identities of the Moutard step restricted to y-separable data
/// ω = f(x)e^{a·y}, φ = g(x)e^{b·y} with H₀f = a²f, H₀g = b²g for
/// H₀ = −d²/dx² + u. The transformed θ = h(x)e^{(a+b)y} has
/// h = (g′ − (f′/f)g)/(a + b).
struct ReductionReport {
  bool f_eigen = false;      ///< H₀f = a²f
  bool g_eigen = false;      ///< H₀g = b²g
  bool x_component = false;  ///< (fh)′ = (a − b)fg
  bool darboux_form = false; ///< h = −A g/(a + b), A built from f
  bool all() const { return f_eigen && g_eigen && x_component && darboux_form; }
};

/// Throws std::invalid_argument when a + b = 0.
ReductionReport moutard_reduction_check(const RatFun1D& u, const ExpRat1D& f, const Rational& a, const ExpRat1D& g,
                                        const Rational& b);

}  // namespace moutard
