#include "moutard/sigma.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "moutard/errors.hpp"
#include "moutard/parallel.hpp"

namespace moutard {

void SigmaState::check() const {
  if (sigma.size() != N + 1) {
    throw std::invalid_argument("SigmaState: expected " + std::to_string(N + 1) + " coefficients, got " +
                                std::to_string(sigma.size()));
  }
}

SigmaState sigma_from_polynomial(const TriPoly& p, unsigned N) {
  if (p.depends_on(Var::zbar) || p.depends_on(Var::t)) throw NotHolomorphic("sigma state needs a z-only polynomial");
  if (p.degree(Var::z) > N) throw std::invalid_argument("polynomial degree exceeds N");
  SigmaState s{N, std::vector<GaussianRational>(N + 1)};
  for (unsigned k = 0; k <= N; ++k) s.sigma[k] = p.coefficient({N - k, 0, 0});
  return s;
}

TriPoly to_polynomial(const SigmaState& s) {
  s.check();
  std::vector<std::pair<Exponents, GaussianRational>> terms;
  for (unsigned k = 0; k <= s.N; ++k) terms.push_back({{s.N - k, 0, 0}, s.sigma[k]});
  return TriPoly::from_terms(std::move(terms));
}

SigmaState sigma_evolve(const SigmaState& s, const Rational& t) {
  s.check();
  const unsigned N = s.N;
  auto apply_m = [N](const std::vector<GaussianRational>& v) {
    std::vector<GaussianRational> out(N + 1);
    for (unsigned k = 3; k <= N; ++k) {
      const long c = static_cast<long>(N - k + 3) * (N - k + 2) * (N - k + 1);
      out[k] = v[k - 3] * GaussianRational(c);
    }
    return out;
  };
  SigmaState r = s;
  std::vector<GaussianRational> term = s.sigma;
  Rational coef(1);
  for (unsigned j = 1; 3 * j <= N; ++j) {
    term = apply_m(term);
    coef *= t;
    coef /= j;
    const GaussianRational c(coef);
    for (unsigned k = 0; k <= N; ++k) r.sigma[k].add_product(term[k], c);
  }
  if (!(r.sigma[0] == s.sigma[0])) throw std::logic_error("sigma_evolve: sigma_0 changed");
  return r;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0.0) ++lead;
  if (lead == coeffs.size()) throw std::invalid_argument("polynomial_roots: zero polynomial");
  const int n = static_cast<int>(coeffs.size() - lead - 1);
  if (n == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[lead + 1 + j] / coeffs[lead];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

namespace {

double min_separation(const std::vector<std::complex<double>>& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  }
  return m;
}

}  // namespace

RootTrajectory roots_trajectory(const SigmaState& s0, const std::vector<double>& times) {
  s0.check();
  if (s0.sigma[0].is_zero()) throw std::invalid_argument("roots_trajectory: sigma_0 must be nonzero");
  RootTrajectory out;
  out.times = times;
  out.roots.resize(times.size());
  out.matched.assign(times.size(), false);

  // σ(t) is polynomial in t; evaluate the exact coefficients of t^j numerically.
  const unsigned N = s0.N;
  std::vector<std::vector<std::complex<double>>> by_power;
  {
    std::vector<GaussianRational> term = s0.sigma;
    Rational inv_fact(1);
    for (unsigned j = 0;; ++j) {
      std::vector<std::complex<double>> row(N + 1);
      for (unsigned k = 0; k <= N; ++k) row[k] = (term[k] * GaussianRational(inv_fact)).to_complex();
      by_power.push_back(std::move(row));
      if (3 * (j + 1) > N) break;
      std::vector<GaussianRational> next(N + 1);
      for (unsigned k = 3; k <= N; ++k) {
        next[k] = term[k - 3] * GaussianRational(static_cast<long>(N - k + 3) * (N - k + 2) * (N - k + 1));
      }
      term = std::move(next);
      inv_fact /= (j + 1);
    }
  }

  parallel_for(times.size(), [&](std::size_t i) {
    std::vector<std::complex<double>> c(N + 1);
    double tp = 1.0;
    for (const auto& row : by_power) {
      for (unsigned k = 0; k <= N; ++k) c[k] += row[k] * tp;
      tp *= times[i];
    }
    out.roots[i] = polynomial_roots(c);
  });

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double sep = min_separation(out.roots[i]);
    const bool ill = sep < 1e-8;
    if (ill) {
      std::ostringstream w;
      w << "IllConditioned: root separation " << sep << " at t = " << times[i];
      out.warnings.push_back(w.str());
    }
    if (i == 0 || ill || min_separation(out.roots[i - 1]) < 1e-8) continue;
    // Greedy: repeatedly take the globally closest (previous, current) pair.
    const auto& prev = out.roots[i - 1];
    auto cur = out.roots[i];
    const std::size_t n = cur.size();
    std::vector<std::complex<double>> ordered(n);
    std::vector<bool> used_prev(n, false), used_cur(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bp = 0, bc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (used_prev[a]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!used_cur[b] && std::abs(prev[a] - cur[b]) < best) best = std::abs(prev[a] - cur[b]), bp = a, bc = b;
        }
      }
      used_prev[bp] = used_cur[bc] = true;
      ordered[bp] = cur[bc];
    }
    // Collision: some current root is nearer to a different previous root
    // than to the one it was assigned.
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (b != a && std::abs(prev[b] - ordered[a]) < std::abs(prev[a] - ordered[a])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.roots[i] = std::move(ordered);
    out.matched[i] = ok;
  }
  return out;
}

}  // namespace moutard
