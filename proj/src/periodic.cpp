#include "moutard/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "moutard/errors.hpp"
#include "moutard/parallel.hpp"

namespace moutard {

namespace {

constexpr double kPoleTol = 1e-12;

std::string at(double x, double y) {
  std::ostringstream s;
  s.precision(17);
  s << "(" << x << ", " << y << ")";
  return s.str();
}

}  // namespace

void PeriodicParams::check() const {
  if (k == 0.0) throw std::invalid_argument("periodic: k must be nonzero");
  if (std::abs(a * a + b * b - k * k) > 1e-12 * std::max(1.0, k * k)) {
    throw std::invalid_argument("periodic: need a^2 + b^2 = k^2");
  }
  if (b == 0.0) throw std::invalid_argument("periodic: a = +-k makes omega2 proportional to omega1");
}

TauJet periodic_tau(const PeriodicParams& p, double x, double y) {
  p.check();
  const double pp = p.a * x + p.b * y + p.k * x;
  const double pm = p.a * x + p.b * y - p.k * x;
  const double ap = p.a + p.k, am = p.a - p.k;
  const double cp = std::cos(pp), cm = std::cos(pm), sp = std::sin(pp), sm = std::sin(pm);
  const double h = 0.5 * p.b;
  TauJet j;
  j.v = h * (cp / ap - cm / am + p.C);
  j.x = h * (-sp + sm);
  j.y = h * (-p.b * sp / ap + p.b * sm / am);
  j.xx = h * (-ap * cp + am * cm);
  j.yy = h * (-p.b * p.b * cp / ap + p.b * p.b * cm / am);
  return j;
}

double periodic_theta(const PeriodicParams& p, double x, double y) {
  const double s = std::sin(p.k * x);
  if (std::abs(s) < kPoleTol) throw PoleError("theta1: sin kx = 0 at " + at(x, y));
  return periodic_tau(p, x, y).v / s;
}

double first_step_potential(const PeriodicParams& p, double x) {
  const double s = std::sin(p.k * x);
  if (std::abs(s) < kPoleTol) throw PoleError("first-step potential: sin kx = 0 at x = " + at(x, 0.0));
  const double cot = std::cos(p.k * x) / s;
  return p.k * p.k + 2.0 * p.k * p.k * cot * cot;
}

double periodic_potential(const PeriodicParams& p, double x, double y) {
  const TauJet t = periodic_tau(p, x, y);
  const double scale = std::abs(p.b) * (1.0 + std::abs(p.C));
  if (std::abs(t.v) <= kPoleTol * scale) throw PoleError("potential: tau_per = 0 at " + at(x, y));
  const double lap_log = (t.v * (t.xx + t.yy) - (t.x * t.x + t.y * t.y)) / (t.v * t.v);
  return -p.k * p.k - 2.0 * lap_log;
}

double periodic_psi1(const PeriodicParams& p, double x, double y) {
  const TauJet t = periodic_tau(p, x, y);
  if (t.v == 0.0) throw PoleError("psi1: tau_per = 0 at " + at(x, y));
  return std::sin(p.k * x) / t.v;
}

double fd_residual(const std::function<std::complex<double>(double, double)>& psi,
                   const std::function<double(double, double)>& u, const Lattice& grid, double h) {
  if (grid.n < 1 || !(h > 0.0)) throw std::invalid_argument("fd_residual: need n >= 1 and h > 0");
  const int n = grid.n;
  const double dx = n > 1 ? (grid.x_max - grid.x_min) / (n - 1) : 0.0;
  const double dy = n > 1 ? (grid.y_max - grid.y_min) / (n - 1) : 0.0;
  std::vector<double> row_max(n, 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double x = grid.x_min + dx * static_cast<double>(i);
    double m = 0.0;
    for (int j = 0; j < n; ++j) {
      const double y = grid.y_min + dy * j;
      const std::complex<double> c = psi(x, y);
      const std::complex<double> lap = (psi(x + h, y) + psi(x - h, y) + psi(x, y + h) + psi(x, y - h) - 4.0 * c) / (h * h);
      m = std::max(m, std::abs(-lap + u(x, y) * c));
    }
    row_max[i] = m;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

double fd_kernel_residual(const PeriodicParams& p, const Lattice& grid, double h) {
  p.check();
  auto psi = [&p](double x, double y) { return std::complex<double>(periodic_psi1(p, x, y)); };
  auto u = [&p](double x, double y) { return periodic_potential(p, x, y); };
  return fd_residual(psi, u, grid, h);
}

double periodic_tau_min(const PeriodicParams& p, const Lattice& grid) {
  p.check();
  const int n = std::max(grid.n, 1);
  const double dx = n > 1 ? (grid.x_max - grid.x_min) / (n - 1) : 0.0;
  const double dy = n > 1 ? (grid.y_max - grid.y_min) / (n - 1) : 0.0;
  std::vector<double> row_min(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) m = std::min(m, periodic_tau(p, grid.x_min + dx * static_cast<double>(i), grid.y_min + dy * j).v);
    row_min[i] = m;
  });
  return *std::min_element(row_min.begin(), row_min.end());
}

std::complex<double> plane_wave_theta(double k, double p, double q, double c, double x, double y) {
  const double s = std::sin(k * x);
  if (std::abs(s) < kPoleTol) throw PoleError("plane-wave theta: sin kx = 0 at " + at(x, y));
  const std::complex<double> I(0.0, 1.0);
  // ωθ solves (ωθ)_x = φω_y − ωφ_y, (ωθ)_y = ωφ_x − φω_x.
  if (std::abs(q) < 1e-14 * std::abs(k)) return (-k * y + c) / s;
  const std::complex<double> e = std::exp(I * (p * x + q * y));
  return (e * (p * s + I * k * std::cos(k * x)) / q + c) / s;
}

std::complex<double> superpose_values(std::complex<double> omega1, std::complex<double> omega2,
                                      std::complex<double> omega3, std::complex<double> theta1,
                                      std::complex<double> theta2, std::complex<double> lambda) {
  if (lambda == 0.0) throw ZeroLambda("lambda = 0");
  return omega3 + omega1 * omega2 * (theta2 - theta1) / lambda;
}

std::complex<double> periodic_basis_member(const PeriodicParams& params, double p, double q, double x, double y,
                                           double c13, double c23) {
  params.check();
  const double k = params.k;
  if (std::abs(p * p + q * q - k * k) > 1e-12 * std::max(1.0, k * k)) {
    throw std::invalid_argument("periodic_basis_member: need p^2 + q^2 = k^2");
  }
  const std::complex<double> I(0.0, 1.0);
  const double omega1 = std::sin(k * x);
  const double omega2 = std::sin(params.a * x + params.b * y);
  const std::complex<double> omega3 = std::exp(I * (p * x + q * y));
  const TauJet lam = periodic_tau(params, x, y);
  if (std::abs(omega2) < kPoleTol) throw PoleError("basis member: omega2 = 0 at " + at(x, y));
  if (lam.v == 0.0) throw PoleError("basis member: tau_per = 0 at " + at(x, y));

  const std::complex<double> theta1 = plane_wave_theta(k, p, q, c13, x, y);
  // Edge along ω₂ = sin(k s): rotate to s = (ax + by)/k, r = (−bx + ay)/k.
  const double s = (params.a * x + params.b * y) / k;
  const double r = (-params.b * x + params.a * y) / k;
  const double ps = (p * params.a + q * params.b) / k;
  const double qs = (-p * params.b + q * params.a) / k;
  const std::complex<double> theta2 = plane_wave_theta(k, ps, qs, c23, s, r);
  return superpose_values(omega1, omega2, omega3, theta1, theta2, lam.v);
}

}  // namespace moutard
