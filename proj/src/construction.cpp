#include "moutard/construction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "minimize.hpp"
#include "moutard/errors.hpp"
#include "moutard/parallel.hpp"

namespace moutard {

HarmonicSeed::HarmonicSeed(TriPoly p) : p_(std::move(p)) {
  if (p_.depends_on(Var::zbar) || p_.depends_on(Var::t)) {
    throw NotHolomorphic("seed must be a polynomial in z alone: " + p_.to_string());
  }
}

TriPoly harmonic_from_holomorphic(const HarmonicSeed& seed) { return seed.p() + seed.p().conjugate(); }

TriPoly moutard_bracket(const TriPoly& p1, const TriPoly& p2) {
  const TriPoly a = p1 * p2.conjugate() - p2 * p1.conjugate();
  const TriPoly s = (p1.derive(Var::z) * p2 - p1 * p2.derive(Var::z)).antiderivative(Var::z);
  return a + s - s.conjugate();
}

TriPoly moutard_tau(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C) {
  return moutard_bracket(p1.p(), p2.p()) * GaussianRational::i() + TriPoly(GaussianRational(C));
}

RatFun moutard_theta(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C) {
  const TriPoly omega1 = harmonic_from_holomorphic(p1);
  if (omega1.is_zero()) throw DegenerateSeed("omega1 = p1 + conj(p1) is identically zero");
  return RatFun(moutard_tau(p1, p2, C), omega1);
}

MoutardResult two_step_construct(const HarmonicSeed& p1, const HarmonicSeed& p2, const Rational& C) {
  const TriPoly omega1 = harmonic_from_holomorphic(p1);
  const TriPoly omega2 = harmonic_from_holomorphic(p2);
  if (omega1.is_zero()) throw DegenerateSeed("omega1 = p1 + conj(p1) is identically zero");
  TriPoly tau = moutard_tau(p1, p2, C);
  if (tau.is_zero()) throw ZeroTau("tau = i*B + C is identically zero");

  MoutardResult r;
  r.u = log_laplacian_ratio(tau) * RatFun(TriPoly(-8));
  r.psi1 = RatFun(omega1, tau);
  r.psi2 = RatFun(-omega2, tau);
  r.tau = std::move(tau);
  r.C = C;
  return r;
}

RatFun kernel_residual(const RatFun& u, const RatFun& psi) {
  RatFun lap = psi.derive(Var::z).derive(Var::zbar);
  return u * psi - lap * RatFun(TriPoly(4));
}

bool verify_kernel(const RatFun& u, const RatFun& psi) { return kernel_residual(u, psi).is_zero(); }

double estimate_decay(const RatFun& f, double r_min, double r_max, int n_rays) {
  if (!(r_min > 0.0 && r_max > r_min) || n_rays < 1) {
    throw std::invalid_argument("estimate_decay: need 0 < r_min < r_max and n_rays >= 1");
  }
  constexpr int kSamples = 41;
  const double l0 = std::log(r_min);
  const double l1 = std::log(r_max);
  double slope_sum = 0.0;
  for (int k = 0; k < n_rays; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n_rays + 0.1;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int s = 0; s < kSamples; ++s) {
      const double lr = l0 + (l1 - l0) * s / (kSamples - 1);
      const double r = std::exp(lr);
      const double v = std::abs(evaluate_at(f, r * std::cos(angle), r * std::sin(angle)));
      const double lv = std::log(v);
      sx += lr;
      sy += lv;
      sxx += lr * lr;
      sxy += lr * lv;
    }
    const double n = kSamples;
    slope_sum += (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return slope_sum / n_rays;
}

ConstantFit fit_constant(const HarmonicSeed& p1, const HarmonicSeed& p2, const TriPoly& target) {
  const TriPoly ib = moutard_bracket(p1.p(), p2.p()) * GaussianRational::i();
  // Non-constant part of i·B must equal scale·target exactly.
  const TriPoly target_var = target - TriPoly(target.constant_term());
  const TriPoly ib_var = ib - TriPoly(ib.constant_term());
  if (target_var.is_zero() || ib_var.is_zero()) {
    throw FitError("fit_constant: cannot fix the scale from a constant polynomial");
  }
  const GaussianRational scale = ib_var.leading_coefficient() / target_var.leading_coefficient();
  if (!(ib_var == target_var * scale)) {
    throw FitError("fit_constant: tau is not proportional to the target for any C; tau - C = " +
                   ib.to_string());
  }
  const GaussianRational c = scale * target.constant_term() - ib.constant_term();
  if (!c.is_real()) throw FitError("fit_constant: the matching constant is not real: " + c.to_string());
  return {c.re(), scale};
}

NonvanishingReport certify_nonvanishing(const TriPoly& tau, int resolution) {
  NonvanishingReport rep;
  if (tau.depends_on(Var::t)) throw std::invalid_argument("certify_nonvanishing: tau must be t-free");
  if (tau.is_zero()) {
    rep.zero = std::make_pair(0.0, 0.0);
    rep.verdict = "zero found at (0, 0)";
    return rep;
  }
  const std::uint32_t d = tau.total_degree();
  const TriPoly lead = tau.homogeneous_part(d);

  constexpr int kCircle = 10000;
  double lmin = std::numeric_limits<double>::infinity();
  double lmax = -lmin;
  for (int k = 0; k < kCircle; ++k) {
    const double a = 2.0 * std::numbers::pi * k / kCircle;
    const double v = lead.evaluate_xy(std::cos(a), std::sin(a)).real();
    lmin = std::min(lmin, v);
    lmax = std::max(lmax, v);
  }
  rep.sign = lmax > 0.0 ? 1 : -1;
  if (rep.sign < 0) lmin = -lmax;
  rep.leading_form_min = lmin;
  rep.leading_form_positive = lmin > 0.0;

  double lower_sum = 0.0;
  for (const auto& term : tau.terms()) {
    if (TriPoly::unpack(term.key).total() < d) lower_sum += std::abs(term.coeff.to_complex());
  }
  rep.radius = rep.leading_form_positive ? 1.05 * std::max(1.0, lower_sum / lmin) : 10.0;

  const int sign = rep.sign;
  auto f = [&tau, sign](double x, double y) { return sign * tau.evaluate_xy(x, y).real(); };

  const int n = std::max(resolution, 3);
  const double R = rep.radius;
  const double h = 2.0 * R / (n - 1);
  std::vector<double> row_min(n);
  std::vector<int> row_arg(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    const double x = -R + h * static_cast<double>(i);
    for (int j = 0; j < n; ++j) {
      const double v = f(x, -R + h * j);
      if (v < best) best = v, arg = j;
    }
    row_min[i] = best;
    row_arg[i] = arg;
  });
  int bi = 0;
  for (int i = 1; i < n; ++i) {
    if (row_min[i] < row_min[bi]) bi = i;
  }
  auto refined = detail::compass_minimize(f, -R + h * bi, -R + h * row_arg[bi], h);
  if (std::abs(refined.x) > R + h || std::abs(refined.y) > R + h) {
    // Unbounded below: keep the lattice minimizer rather than chase it outward.
    refined = {-R + h * bi, -R + h * row_arg[bi], row_min[bi]};
  }
  rep.grid_min = refined.value;
  rep.argmin_x = refined.x;
  rep.argmin_y = refined.y;

  std::ostringstream verdict;
  if (rep.grid_min <= 0.0 || !rep.leading_form_positive) {
    // Bisect between a nonpositive point and a positive one.
    double ax = refined.x, ay = refined.y;
    if (rep.grid_min > 0.0) {
      // Indefinite leading form: take the circle direction where it is negative, far out.
      for (int k = 0; k < kCircle; ++k) {
        const double a = 2.0 * std::numbers::pi * k / kCircle;
        if (sign * lead.evaluate_xy(std::cos(a), std::sin(a)).real() < 0.0) {
          ax = 4.0 * R * std::cos(a);
          ay = 4.0 * R * std::sin(a);
          break;
        }
      }
    }
    double bx = refined.x, by = refined.y;
    bool have_positive = false;
    for (int k = 0; k < 64 && !have_positive; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 64;
      for (double r : {0.5 * R, R, 2.0 * R, 4.0 * R}) {
        const double px = ax + r * std::cos(a);
        const double py = ay + r * std::sin(a);
        if (f(px, py) > 0.0) {
          bx = px, by = py, have_positive = true;
          break;
        }
      }
    }
    if (f(ax, ay) <= 0.0 && have_positive) {
      for (int it = 0; it < 200; ++it) {
        const double mx = 0.5 * (ax + bx);
        const double my = 0.5 * (ay + by);
        if (f(mx, my) <= 0.0) {
          ax = mx, ay = my;
        } else {
          bx = mx, by = my;
        }
      }
      rep.zero = std::make_pair(ax, ay);
      verdict << "zero found at (" << ax << ", " << ay << ")";
    } else if (!rep.leading_form_positive) {
      verdict << "inconclusive: leading form is not positive definite";
    } else {
      rep.zero = std::make_pair(ax, ay);
      verdict << "zero found at (" << ax << ", " << ay << ")";
    }
  } else {
    rep.certified = true;
    verdict << "certified-positive (heuristic)";
  }
  rep.verdict = verdict.str();
  return rep;
}

}  // namespace moutard
