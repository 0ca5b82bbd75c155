#include "moutard/nv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minimize.hpp"
#include "moutard/errors.hpp"
#include "moutard/parallel.hpp"

namespace moutard {

namespace {

// Best rational approximation with denominator ≤ max_den (continued fractions).
Rational rationalize(double v, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = v;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(x);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const double frac = x - a;
    if (frac < 1e-13) break;
    x = 1.0 / frac;
  }
  Rational q(h1, k1);
  q.canonicalize();
  return q;
}

TriPoly d_dx(const TriPoly& p) { return p.derive(Var::z) + p.derive(Var::zbar); }
TriPoly d_dy(const TriPoly& p) { return (p.derive(Var::z) - p.derive(Var::zbar)) * GaussianRational::i(); }

}  // namespace

RatFun convert_potential(const RatFun& f, SchrodingerConvention from, SchrodingerConvention to) {
  if (from == to) return f;
  if (from == SchrodingerConvention::wirtinger) return f * RatFun(TriPoly(-4));
  return f * RatFun(TriPoly(GaussianRational(Rational(-1, 4))));
}

FlowingSeed::FlowingSeed(TriPoly p) : p_(std::move(p)) {
  if (p_.depends_on(Var::zbar)) throw NotHolomorphic("flowing seed must not contain w: " + p_.to_string());
  if (!(p_.derive(Var::t) == p_.derive(Var::z, 3))) {
    throw NotOnFlow("seed does not satisfy p_t = p_zzz: " + p_.to_string());
  }
}

FlowingSeed flow_solve(const HarmonicSeed& p0) {
  TriPoly sum;
  TriPoly term = p0.p();
  TriPoly t_power(1);
  Rational factorial(1);
  for (long k = 0; !term.is_zero(); ++k) {
    if (k > 0) {
      factorial *= k;
      t_power = t_power * TriPoly::t();
    }
    sum += term * t_power * GaussianRational(Rational(1) / factorial);
    term = term.derive(Var::z, 3);
  }
  return FlowingSeed(std::move(sum));
}

TriPoly extended_dt_integrand(const TriPoly& p1, const TriPoly& p2) {
  auto d = [](const TriPoly& p, unsigned n) { return p.derive(Var::z, n); };
  const TriPoly h = d(p1, 3) * p2 - p1 * d(p2, 3) + (d(p1, 1) * d(p2, 2) - d(p1, 2) * d(p2, 1)) * GaussianRational(2);
  const TriPoly q1 = p1.conjugate(), q2 = p2.conjugate();
  // Mixed holomorphic × antiholomorphic part; σ-antifixed on its own.
  const TriPoly m = d(p1, 3) * q2 - d(p2, 3) * q1 + p1 * q2.derive(Var::zbar, 3) - p2 * q1.derive(Var::zbar, 3);
  return h - h.conjugate() + m;
}

TriPoly extended_tau(const FlowingSeed& p1, const FlowingSeed& p2, const Rational& C) {
  const TriPoly base = moutard_bracket(p1.p(), p2.p());
  const TriPoly deficit = extended_dt_integrand(p1.p(), p2.p()) - base.derive(Var::t);
  if (deficit.depends_on(Var::z) || deficit.depends_on(Var::zbar)) {
    throw NotClosed("dt-deficit depends on z or w: " + deficit.leading_term_string());
  }
  return (base + deficit.antiderivative(Var::t)) * GaussianRational::i() + TriPoly(GaussianRational(C));
}

NVSolution nv_fields(const TriPoly& phi) {
  if (phi.is_zero()) throw ZeroTau("nv_fields: phi is identically zero");
  NVSolution sol;
  sol.phi = phi;
  sol.U = log_laplacian_ratio(phi) * RatFun(TriPoly(2));
  sol.V = log_second_z_ratio(phi) * RatFun(TriPoly(2));
  const RatFun constraint = sol.V.derive(Var::zbar) - sol.U.derive(Var::z);
  if (!constraint.is_zero()) {
    throw std::logic_error("nv_fields: dbar V != d U, leading term " + constraint.num().leading_term_string());
  }
  return sol;
}

RatFun nv_residual(const NVSolution& sol, int sign) {
  const RatFun& U = sol.U;
  const RatFun vu = sol.V * U;
  const RatFun vbar_u = sol.V.conjugate() * U;
  RatFun rhs = U.derive(Var::z, 3) + U.derive(Var::zbar, 3) +
               (vu.derive(Var::z) + vbar_u.derive(Var::zbar)) * RatFun(TriPoly(3));
  return U.derive(Var::t) - rhs * RatFun(TriPoly(sign));
}

GaussianRational evaluate_exact(const TriPoly& p, const Rational& x, const Rational& y, const Rational& t) {
  const GaussianRational z(x, y);
  const GaussianRational w(x, -y);
  GaussianRational sum;
  for (const auto& term : p.terms()) {
    const Exponents e = TriPoly::unpack(term.key);
    GaussianRational v = term.coeff;
    for (std::uint32_t k = 0; k < e.ez; ++k) v *= z;
    for (std::uint32_t k = 0; k < e.ew; ++k) v *= w;
    for (std::uint32_t k = 0; k < e.et; ++k) v *= GaussianRational(t);
    sum += v;
  }
  return sum;
}

BlowupResult blowup_time(const TriPoly& phi) {
  if (phi.degree(Var::t) != 1) throw NotAffineInT("phi must be of degree exactly 1 in t");
  const TriPoly slope = phi.derive(Var::t);
  if (!slope.is_constant()) throw NotAffineInT("the t-coefficient of phi depends on x, y");
  const GaussianRational b = slope.constant_term();
  if (!b.is_real()) throw NotAffineInT("the t-coefficient of phi is not real");
  TriPoly g = phi.at_time(Rational(0));
  if (!g.is_sigma_fixed()) throw NotAffineInT("phi at t = 0 is not real (sigma-fixed)");

  BlowupResult res;
  if (g.is_constant()) {
    const Rational g0 = g.constant_term().re();
    res.sign = sgn(g0) >= 0 ? 1 : -1;
    res.g_min_exact = g0 * res.sign;
    res.g_min = res.g_min_exact->get_d();
    res.witnesses.emplace_back(0.0, 0.0);
  } else {
    const NonvanishingReport rep = certify_nonvanishing(g);
    res.sign = rep.sign;
    if (!rep.certified) throw NoBlowup("phi at t = 0 is not positive: " + rep.verdict);
    g *= GaussianRational(res.sign);

    const TriPoly gx = d_dx(g);
    const TriPoly gy = d_dy(g);
    const TriPoly gxx = d_dx(gx), gxy = d_dy(gx), gyy = d_dy(gy);
    auto f = [&g](double x, double y) { return g.evaluate_xy(x, y).real(); };

    // Local minima of the lattice, polished by compass search and Newton.
    const int n = 201;
    const double R = rep.radius;
    const double h = 2.0 * R / (n - 1);
    std::vector<double> vals(static_cast<std::size_t>(n) * n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      for (int j = 0; j < n; ++j) vals[i * n + j] = f(-R + h * static_cast<double>(i), -R + h * j);
    });
    struct Cand {
      double x, y, v;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double v = vals[static_cast<std::size_t>(i) * n + j];
        bool local = true;
        for (int di = -1; di <= 1 && local; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            const int a = i + di, c = j + dj;
            if ((di || dj) && a >= 0 && a < n && c >= 0 && c < n && vals[static_cast<std::size_t>(a) * n + c] < v) {
              local = false;
              break;
            }
          }
        }
        if (!local) continue;
        auto p = detail::compass_minimize(f, -R + h * i, -R + h * j, h, 1e-13);
        for (int it = 0; it < 20; ++it) {
          const double ax = gxx.evaluate_xy(p.x, p.y).real(), bxy = gxy.evaluate_xy(p.x, p.y).real();
          const double cy = gyy.evaluate_xy(p.x, p.y).real();
          const double fx = gx.evaluate_xy(p.x, p.y).real(), fy = gy.evaluate_xy(p.x, p.y).real();
          const double det = ax * cy - bxy * bxy;
          if (std::abs(det) < 1e-300) break;
          const double nx = p.x - (cy * fx - bxy * fy) / det;
          const double ny = p.y - (ax * fy - bxy * fx) / det;
          const double nv = f(nx, ny);
          if (!(nv <= p.value + 1e-12 * std::abs(p.value))) break;
          p = {nx, ny, nv};
        }
        cands.push_back({p.x, p.y, p.value});
      }
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : cands) best = std::min(best, c.v);
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    for (const auto& c : cands) {
      if (c.v > best + tol) continue;
      bool dup = false;
      for (const auto& wpt : res.witnesses) {
        if (std::hypot(wpt.first - c.x, wpt.second - c.y) < 1e-6) dup = true;
      }
      if (!dup) res.witnesses.emplace_back(c.x, c.y);
    }
    res.g_min = best;
    std::sort(res.witnesses.begin(), res.witnesses.end());

    // Exact refinement: a rational critical point gives an exact minimum.
    for (const auto& [wx, wy] : res.witnesses) {
      const Rational qx = rationalize(wx, 10000);
      const Rational qy = rationalize(wy, 10000);
      if (evaluate_exact(gx, qx, qy).is_zero() && evaluate_exact(gy, qx, qy).is_zero()) {
        const GaussianRational v = evaluate_exact(g, qx, qy);
        if (v.is_real() && std::abs(v.re().get_d() - best) <= tol) {
          res.g_min_exact = v.re();
          break;
        }
      }
    }
  }

  const Rational speed = -b.re() * res.sign;
  if (sgn(speed) <= 0) throw NoBlowup("phi does not decrease in t; no real zero appears for t > 0");
  if (res.g_min <= 0.0) throw NoBlowup("phi already vanishes at t = 0");
  res.speed = speed;
  res.t_star = res.g_min / speed.get_d();
  if (res.g_min_exact) {
    res.t_star_exact = *res.g_min_exact / speed;
    res.t_star = res.t_star_exact->get_d();
  }
  return res;
}

std::vector<std::pair<double, double>> singular_set(const TriPoly& phi, double t, const Window& window,
                                                    int resolution) {
  if (t < 0.0) throw std::invalid_argument("singular_set: t must be nonnegative");
  const int n = std::max(resolution, 2);
  const double hx = (window.x_max - window.x_min) / (n - 1);
  const double hy = (window.y_max - window.y_min) / (n - 1);
  std::vector<double> vals(static_cast<std::size_t>(n) * n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double x = window.x_min + hx * static_cast<double>(i);
    for (int j = 0; j < n; ++j) vals[i * n + j] = phi.evaluate_xy(x, window.y_min + hy * j, t).real();
  });
  std::vector<std::pair<double, double>> pts;
  auto at = [&](int i, int j) { return vals[static_cast<std::size_t>(i) * n + j]; };
  auto edge = [&](int i0, int j0, int i1, int j1) {
    const double a = at(i0, j0), b = at(i1, j1);
    if (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)) {
      const double s = a / (a - b);
      pts.emplace_back(window.x_min + hx * (i0 + s * (i1 - i0)), window.y_min + hy * (j0 + s * (j1 - j0)));
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) == 0.0) pts.emplace_back(window.x_min + hx * i, window.y_min + hy * j);
      if (i + 1 < n) edge(i, j, i + 1, j);
      if (j + 1 < n) edge(i, j, i, j + 1);
    }
  }
  return pts;
}

}  // namespace moutard
