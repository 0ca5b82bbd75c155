#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moutard/construction.hpp"
#include "moutard/ratfun.hpp"

namespace moutard {

/// H = −Δ + u versus H = ∂∂̄ + U; the two are related by u = −4U.
enum class SchrodingerConvention { laplacian, wirtinger };

/// Converts a potential between conventions.
RatFun convert_potential(const RatFun& f, SchrodingerConvention from, SchrodingerConvention to);

/// Holomorphic polynomial p(z, t) solving ∂_t p = ∂_z³ p.
class FlowingSeed {
 public:
  /// Throws NotHolomorphic if p contains w, NotOnFlow if the flow fails.
  explicit FlowingSeed(TriPoly p);
  const TriPoly& p() const { return p_; }

 private:
  TriPoly p_;
};

/// p(z, t) = Σ_k tᵏ/k! ∂_z^{3k} p₀, a finite sum.
FlowingSeed flow_solve(const HarmonicSeed& p0);

/// Φ(z, w, t) = i·(A + S + T) + C for the time-extended two-step Moutard
/// construction. The z and w parts are integrated first; the remaining
/// t-derivative deficit must be free of z and w (otherwise NotClosed) and is
/// integrated in t with zero constant term.
TriPoly extended_tau(const FlowingSeed& p1, const FlowingSeed& p2, const Rational& C);

/// The dt-component of the closed form: h − σ(h) + p₁‴σ(p₂) − p₂‴σ(p₁) +
/// p₁σ(p₂)‴ − p₂σ(p₁)‴ with h = p₁‴p₂ − p₁p₂‴ + 2(p₁′p₂″ − p₁″p₂′).
TriPoly extended_dt_integrand(const TriPoly& p1, const TriPoly& p2);

struct NVSolution {
  TriPoly phi;
  RatFun U;  ///< 2∂∂̄ log Φ
  RatFun V;  ///< 2∂² log Φ
  SchrodingerConvention convention = SchrodingerConvention::wirtinger;
};

/// Builds U and V from Φ and checks ∂̄V = ∂U exactly. Throws ZeroTau.
NVSolution nv_fields(const TriPoly& phi);

/// Sign s in U_t = s·(∂³U + ∂̄³U + 3∂(VU) + 3∂̄(V̄U)), fixed by requiring the
/// residual to vanish on the blow-up solution (see the nv tests).
inline constexpr int kNvSign = 1;

/// ∂_t U − s·(∂³U + ∂̄³U + 3∂(VU) + 3∂̄(σ(V)U)) as an exact RatFun.
RatFun nv_residual(const NVSolution& sol, int sign = kNvSign);

struct BlowupResult {
  double t_star = 0.0;
  std::optional<Rational> t_star_exact;  ///< set when the minimizer is a rational critical point
  double g_min = 0.0;
  std::optional<Rational> g_min_exact;
  Rational speed;  ///< c in sign·Φ = g(x, y) − c·t
  int sign = 1;
  std::vector<std::pair<double, double>> witnesses;  ///< all global minimizers found
};

/// First time at which Φ = g − c·t acquires a real zero: t* = min g / c.
/// Throws NotAffineInT or NoBlowup.
BlowupResult blowup_time(const TriPoly& phi);

struct Window {
  double x_min;
  double x_max;
  double y_min;
  double y_max;
};

/// Sign-change points of Φ(·, ·, t) on a resolution × resolution lattice over
/// the window, linearly interpolated along lattice edges.
std::vector<std::pair<double, double>> singular_set(const TriPoly& phi, double t, const Window& window,
                                                    int resolution);

/// Exact value at a rational physical point (z = x + iy, w = x − iy).
GaussianRational evaluate_exact(const TriPoly& p, const Rational& x, const Rational& y,
                                const Rational& t = Rational(0));

}  // namespace moutard
