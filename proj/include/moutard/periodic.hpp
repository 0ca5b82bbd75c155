#pragma once

#include <complex>
#include <functional>

namespace moutard {

/// ω₁ = sin kx, ω₂ = sin(ax + by) with a² + b² = k², over u₀ = −k².
struct PeriodicParams {
  double a = 0.0;
  double b = 1.0;
  double k = 1.0;
  double C = 0.0;

  /// Throws std::invalid_argument unless a² + b² = k² (to 1e-12), k ≠ 0 and
  /// a ≠ ±k (which would make ω₂ proportional to ω₁).
  void check() const;
};

/// τ_per = ω₁θ₁ and its first and second partials, all in closed form.
struct TauJet {
  double v, x, y, xx, yy;
};

/// τ_per = (b/2)(cos φ₊/(a+k) − cos φ₋/(a−k) + C) with φ± = ax + by ± kx.
TauJet periodic_tau(const PeriodicParams& p, double x, double y);

/// θ₁ = τ_per / sin kx. Throws PoleError where |sin kx| < 1e-12.
double periodic_theta(const PeriodicParams& p, double x, double y);

/// First-step potential ũ = −k² − 2Δ log sin kx = k² + 2k²cot² kx.
/// Throws PoleError on sin kx = 0.
double first_step_potential(const PeriodicParams& p, double x);

/// ũ̃ = −k² − 2Δ log τ_per. Throws PoleError where τ_per = 0.
double periodic_potential(const PeriodicParams& p, double x, double y);

/// ψ₁ = 1/θ₁ = sin kx / τ_per, a zero mode of −Δ + ũ̃.
double periodic_psi1(const PeriodicParams& p, double x, double y);

/// n × n lattice of sample points spanning [x_min, x_max] × [y_min, y_max].
struct Lattice {
  double x_min, x_max, y_min, y_max;
  int n;
};

/// max over the lattice of |(−Δ_h + u)ψ| with the 5-point Laplacian of step h.
double fd_residual(const std::function<std::complex<double>(double, double)>& psi,
                   const std::function<double(double, double)>& u, const Lattice& grid, double h);

/// fd_residual for ψ₁ and ũ̃. Throws PoleError if τ_per vanishes near the grid.
double fd_kernel_residual(const PeriodicParams& p, const Lattice& grid, double h);

/// Minimum of τ_per over the lattice (sampled in parallel).
double periodic_tau_min(const PeriodicParams& p, const Lattice& grid);

/// Moutard image of the plane wave e^{i(px+qy)} under the step by sin(kx)
/// (c is the quadrature constant). Needs p² + q² = k².
std::complex<double> plane_wave_theta(double k, double p, double q, double c, double x, double y);

/// θ′ from the superposition formula with ω₃ = e^{i(px+qy)}:
/// θ′ = ω₃ + ω₁ω₂(θ₂ − θ₁)/τ_per, where θ₁, θ₂ carry ω₃ along ω₁ and ω₂
/// (constants c13, c23). It solves (−Δ + ũ̃)θ′ = 0. Throws PoleError on the
/// lines ω₁ω₂ = 0 or τ_per = 0; std::invalid_argument unless p² + q² = k².
std::complex<double> periodic_basis_member(const PeriodicParams& params, double p, double q, double x, double y,
                                           double c13 = 0.0, double c23 = 0.0);

/// The collapse of the superposition formula: ω₃ + ω₁ω₂(θ₂ − θ₁)/λ.
std::complex<double> superpose_values(std::complex<double> omega1, std::complex<double> omega2,
                                      std::complex<double> omega3, std::complex<double> theta1,
                                      std::complex<double> theta2, std::complex<double> lambda);

}  // namespace moutard
