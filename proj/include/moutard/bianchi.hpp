#pragma once

#include <string>

#include "moutard/construction.hpp"
#include "moutard/nv.hpp"
#include "moutard/ratfun.hpp"

namespace moutard {

/// Edges of the Moutard cube over U₀ = 0 spanned by ω₁, ω₂, ω₃.
///
/// Edge (i → j) is θ_ij = τ_ij/ω_i with τ_ij = i·B(p_i, p_j) + C_ij, the
/// image of ω_j under the step defined by ω_i.
struct CubeState {
  TriPoly omega1, omega2, omega3;
  RatFun theta1;   ///< ω₃ carried to the U₁ corner
  RatFun theta2;   ///< ω₃ carried to the U₂ corner
  RatFun omega1p;  ///< ω₁ carried to the U₂ corner
  RatFun omega2p;  ///< ω₂ carried to the U₁ corner
  RatFun lambda;
  TriPoly tau12;   ///< ω₁·ω₂′, the τ of the U₁₂ corner
  RatFun U12;      ///< 2∂∂̄ log τ₁₂ (Wirtinger convention, H = ∂∂̄ + U)
  /// Which naming of the primes the pairing identity selected:
  /// "w2*w1p = -w1*w2p" or "w1*w1p = -w2*w2p".
  std::string pairing;
};

/// Runs the six first- and second-level quadratures. The constant of the
/// (2 → 1) edge is solved for so that the pairing identity holds exactly.
/// Throws DegenerateSeed (ω ≡ 0 or two ω's proportional) or PairingFailure.
CubeState build_cube(const HarmonicSeed& p1, const HarmonicSeed& p2, const HarmonicSeed& p3, const Rational& C12,
                     const Rational& C13, const Rational& C23);

/// Same cube with seeds flowing under p_t = p_zzz: every edge uses the
/// time-extended τ, so all fields are rational in (z, w, t).
CubeState build_cube(const FlowingSeed& p1, const FlowingSeed& p2, const FlowingSeed& p3, const Rational& C12,
                     const Rational& C13, const Rational& C23);

/// θ′ = ω₃ + ω₁ω₂(θ₂ − θ₁)/λ. Throws ZeroLambda.
RatFun cube_superpose(const CubeState& state);

/// (∂∂̄ + U₁₂)θ′ as an exact RatFun.
RatFun corner_residual(const CubeState& state, const RatFun& theta_prime);

/// Components (dz, dw) of d(ω₂′θ′) + i[(θ₁∂ω₂′ − ω₂′∂θ₁)dz − (θ₁∂̄ω₂′ − ω₂′∂̄θ₁)dw]:
/// zero iff θ′ is a quadrature image of −θ₁ under the step defined by ω₂′
/// (the sign every superposed θ′ carries), up to the c/ω₂′ family.
std::pair<RatFun, RatFun> membership_residual(const CubeState& state, const RatFun& theta_prime);

/// Exact corner equation and exact quadrature-family membership.
bool verify_superposition(const CubeState& state, const RatFun& theta_prime);

/// Seventh-edge oracle: ∫ of the Moutard 1-form carrying θ₁ along ω₂′ on the
/// straight segment from (x0, y0) to (x1, y1), by 64-point Gauss–Legendre
/// quadrature, oriented as in membership_residual. Equals ω₂′θ′ at the end
/// minus at the start for any member of the quadrature family. The segment
/// must avoid the zero set of ω₁.
double seventh_edge_quadrature(const CubeState& state, double x0, double y0, double x1, double y1,
                               double t = 0.0);

}  // namespace moutard
