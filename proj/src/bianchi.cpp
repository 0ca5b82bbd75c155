#include "moutard/bianchi.hpp"

#include <array>
#include <functional>
#include <cmath>
#include <numbers>

#include "moutard/errors.hpp"

namespace moutard {

namespace {

// The superposed θ′ is the quadrature image of −θ₁ (equivalently, of θ₁
// with the 1-form's orientation reversed); established on random cubes.
constexpr long kSeventhEdgeOrientation = -1;

// True iff a = c·b for a constant c (both nonzero).
bool proportional_poly(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const GaussianRational c = a.leading_coefficient() / b.leading_coefficient();
  return a == b * c;
}

CubeState assemble(const TriPoly& p1, const TriPoly& p2, const TriPoly& p3, const Rational& C12,
                   const Rational& C13, const Rational& C23, const std::function<TriPoly(const TriPoly&,
                                                                                         const TriPoly&)>& bracket) {
  CubeState s;
  s.omega1 = p1 + p1.conjugate();
  s.omega2 = p2 + p2.conjugate();
  s.omega3 = p3 + p3.conjugate();
  const std::array<const TriPoly*, 3> om{&s.omega1, &s.omega2, &s.omega3};
  for (int k = 0; k < 3; ++k) {
    if (om[k]->is_zero()) throw DegenerateSeed("omega" + std::to_string(k + 1) + " is identically zero");
  }
  if (proportional_poly(s.omega1, s.omega2)) throw DegenerateSeed("omega1 and omega2 are proportional");
  if (proportional_poly(s.omega1, s.omega3)) throw DegenerateSeed("omega1 and omega3 are proportional");
  if (proportional_poly(s.omega2, s.omega3)) throw DegenerateSeed("omega2 and omega3 are proportional");

  const GaussianRational i = GaussianRational::i();
  auto tau = [&](const TriPoly& a, const TriPoly& b, const Rational& c) {
    return bracket(a, b) * i + TriPoly(GaussianRational(c));
  };
  s.tau12 = tau(p1, p2, C12);
  if (s.tau12.is_zero()) throw ZeroTau("tau12 is identically zero");
  const TriPoly tau13 = tau(p1, p3, C13);
  const TriPoly tau23 = tau(p2, p3, C23);
  const TriPoly tau21_free = tau(p2, p1, Rational(0));

  s.theta1 = RatFun(tau13, s.omega1);
  s.theta2 = RatFun(tau23, s.omega2);
  s.omega2p = RatFun(s.tau12, s.omega1);

  // Pairing ω₂ω₁′ = −ω₁ω₂′ reads τ₂₁ = −τ₁₂: solve for the constant of τ₂₁.
  const TriPoly r = tau21_free + s.tau12;
  if (r.is_constant()) {
    s.omega1p = RatFun(tau21_free - r, s.omega2);
    s.lambda = RatFun(s.tau12);
    s.pairing = "w2*w1p = -w1*w2p";
  } else {
    // The other naming, ω₁ω₁′ = −ω₂ω₂′, i.e. ω₁τ₂₁/ω₂ = −ω₂τ₁₂/ω₁.
    const RatFun lhs(s.omega1 * s.omega1 * tau21_free);
    const RatFun rhs(-(s.omega2 * s.omega2 * s.tau12));
    const RatFun res = lhs - rhs;
    const TriPoly unit = s.omega1 * s.omega1;
    // Adding c to τ₂₁ adds c·ω₁²; a constant choice exists iff res = −c·ω₁².
    const auto c = proportional(res, RatFun(unit));
    if (!c || !c->is_real()) {
      throw PairingFailure("no constant satisfies either pairing; residual " + r.leading_term_string());
    }
    s.omega1p = RatFun(tau21_free - TriPoly(*c), s.omega2);
    s.lambda = RatFun(s.omega1) * s.omega1p;
    s.pairing = "w1*w1p = -w2*w2p";
  }
  s.U12 = log_laplacian_ratio(s.tau12) * RatFun(TriPoly(2));
  return s;
}

}  // namespace

CubeState build_cube(const HarmonicSeed& p1, const HarmonicSeed& p2, const HarmonicSeed& p3, const Rational& C12,
                     const Rational& C13, const Rational& C23) {
  return assemble(p1.p(), p2.p(), p3.p(), C12, C13, C23, moutard_bracket);
}

CubeState build_cube(const FlowingSeed& p1, const FlowingSeed& p2, const FlowingSeed& p3, const Rational& C12,
                     const Rational& C13, const Rational& C23) {
  // extended_tau(a, b, 0) = i·(bracket + dt-correction); divide the i back out.
  auto bracket = [](const TriPoly& a, const TriPoly& b) {
    return extended_tau(FlowingSeed(a), FlowingSeed(b), Rational(0)) * -GaussianRational::i();
  };
  return assemble(p1.p(), p2.p(), p3.p(), C12, C13, C23, bracket);
}

RatFun cube_superpose(const CubeState& s) {
  if (s.lambda.is_zero()) throw ZeroLambda("lambda is identically zero");
  return RatFun(s.omega3) + RatFun(s.omega1 * s.omega2) * (s.theta2 - s.theta1) / s.lambda;
}

RatFun corner_residual(const CubeState& s, const RatFun& theta_prime) {
  return theta_prime.derive(Var::z).derive(Var::zbar) + s.U12 * theta_prime;
}

std::pair<RatFun, RatFun> membership_residual(const CubeState& s, const RatFun& theta_prime) {
  const RatFun& w = s.omega2p;
  const RatFun& phi = s.theta1;
  const RatFun i(TriPoly(GaussianRational::i() * GaussianRational(kSeventhEdgeOrientation)));
  const RatFun prod = w * theta_prime;
  RatFun rz = prod.derive(Var::z) - i * (phi * w.derive(Var::z) - w * phi.derive(Var::z));
  RatFun rw = prod.derive(Var::zbar) + i * (phi * w.derive(Var::zbar) - w * phi.derive(Var::zbar));
  return {std::move(rz), std::move(rw)};
}

bool verify_superposition(const CubeState& s, const RatFun& theta_prime) {
  if (!corner_residual(s, theta_prime).is_zero()) return false;
  const auto [rz, rw] = membership_residual(s, theta_prime);
  return rz.is_zero() && rw.is_zero();
}

double seventh_edge_quadrature(const CubeState& s, double x0, double y0, double x1, double y1, double t) {
  // In real coordinates the 1-form is (φω_y − ωφ_y)dx + (ωφ_x − φω_x)dy.
  const RatFun& w = s.omega2p;
  const RatFun& phi = s.theta1;
  const RatFun wz = w.derive(Var::z), ww = w.derive(Var::zbar);
  const RatFun fz = phi.derive(Var::z), fw = phi.derive(Var::zbar);
  const std::complex<double> I(0.0, 1.0);

  static const auto nodes = [] {
    // 64-point Gauss–Legendre on [−1, 1] via Newton on P₆₄.
    constexpr int n = 64;
    std::array<std::pair<double, double>, n> out{};
    for (int k = 0; k < n; ++k) {
      double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1, p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      out[k] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return out;
  }();

  const double dx = x1 - x0, dy = y1 - y0;
  double sum = 0.0;
  for (const auto& [node, weight] : nodes) {
    const double s01 = 0.5 * (node + 1.0);
    const double x = x0 + s01 * dx, y = y0 + s01 * dy;
    const auto wv = evaluate_at(w, x, y, t), fv = evaluate_at(phi, x, y, t);
    const auto dwz = evaluate_at(wz, x, y, t), dww = evaluate_at(ww, x, y, t);
    const auto dfz = evaluate_at(fz, x, y, t), dfw = evaluate_at(fw, x, y, t);
    const auto w_x = dwz + dww, w_y = I * (dwz - dww);
    const auto f_x = dfz + dfw, f_y = I * (dfz - dfw);
    const auto integrand = (fv * w_y - wv * f_y) * dx + (wv * f_x - fv * w_x) * dy;
    sum += 0.5 * weight * integrand.real();
  }
  return kSeventhEdgeOrientation * sum;
}

}  // namespace moutard
