#pragma once

#include <complex>
#include <string>
#include <vector>

#include "moutard/gaussian_rational.hpp"
#include "moutard/tripoly.hpp"

namespace moutard {

/// Coefficients of p(z) = σ₀z^N + σ₁z^{N−1} + … + σ_N.
struct SigmaState {
  unsigned N = 0;
  std::vector<GaussianRational> sigma;  ///< N + 1 entries

  /// Throws std::invalid_argument unless sigma has N + 1 entries.
  void check() const;
};

/// Coefficients of a z-only polynomial of degree ≤ N. Throws NotHolomorphic.
SigmaState sigma_from_polynomial(const TriPoly& p, unsigned N);

/// p(z) at t = 0, or the polynomial with the given σ's.
TriPoly to_polynomial(const SigmaState& s);

/// Exact solution of σ̇_k = (N−k+3)(N−k+2)(N−k+1)σ_{k−3} at time t. The
/// generator is nilpotent, so exp(tM) is a finite sum.
SigmaState sigma_evolve(const SigmaState& s, const Rational& t);

struct RootTrajectory {
  std::vector<double> times;
  /// roots[i] is the root multiset at times[i], ordered so that roots[i][j]
  /// continues roots[i−1][j] whenever matched[i] is true.
  std::vector<std::vector<std::complex<double>>> roots;
  std::vector<bool> matched;
  std::vector<std::string> warnings;  ///< "IllConditioned: ..."
};

/// Companion-matrix roots at each time, continued across times by greedy
/// nearest-neighbour matching. Steps where the matching collides or roots
/// nearly coincide (separation < 1e-8) are reported unmatched.
/// Throws std::invalid_argument if σ₀ = 0.
RootTrajectory roots_trajectory(const SigmaState& s0, const std::vector<double>& times);

/// Roots of the polynomial with the given (complex) coefficients, leading first.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace moutard
