#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "moutard/errors.hpp"
#include "moutard/periodic.hpp"

using namespace moutard;

namespace {

constexpr double kPi = std::numbers::pi;
const PeriodicParams kDefault{0.0, 1.0, 1.0, 3.0};

}  // namespace

TEST(Periodic, ParameterValidation) {
  EXPECT_NO_THROW(kDefault.check());
  EXPECT_NO_THROW((PeriodicParams{0.6, 0.8, 1.0, 2.0}.check()));
  EXPECT_THROW((PeriodicParams{0.5, 0.5, 1.0, 0.0}.check()), std::invalid_argument);
  EXPECT_THROW((PeriodicParams{1.0, 0.0, 1.0, 0.0}.check()), std::invalid_argument);
  EXPECT_THROW((PeriodicParams{0.0, 0.0, 0.0, 0.0}.check()), std::invalid_argument);
}

TEST(Periodic, ThetaSamples) {
  EXPECT_NEAR(periodic_theta(kDefault, kPi / 2, 0.0), 1.5, 1e-14);
  EXPECT_NEAR(periodic_theta(kDefault, kPi / 2, kPi / 2), 1.5, 1e-14);
  // τ_per = cos x cos y + C/2 here.
  EXPECT_NEAR(periodic_tau(kDefault, 0.3, -1.1).v, std::cos(0.3) * std::cos(-1.1) + 1.5, 1e-14);
  // Shifting C shifts τ by b·ΔC/2.
  PeriodicParams q = kDefault;
  q.C = 5.0;
  EXPECT_NEAR(periodic_tau(q, 0.7, 0.2).v - periodic_tau(kDefault, 0.7, 0.2).v, 1.0, 1e-14);
  EXPECT_THROW(periodic_theta(kDefault, 0.0, 0.3), PoleError);
}

TEST(Periodic, PotentialSamples) {
  // −k² − 2Δ log τ at (π/2, 0): τ = 3/2, Δτ = 0, |∇τ|² = 1 → −1 + 2·1/(9/4)·… = −1/9.
  EXPECT_NEAR(periodic_potential(kDefault, kPi / 2, 0.0), -1.0 / 9.0, 1e-12);
  EXPECT_NEAR(first_step_potential(kDefault, kPi / 4), 3.0, 1e-12);
  EXPECT_THROW(first_step_potential(kDefault, 0.0), PoleError);
  EXPECT_THROW(periodic_potential(PeriodicParams{0.0, 1.0, 1.0, -2.0}, 0.0, 0.0), PoleError);
}

TEST(Periodic, PeriodicityInBothDirections) {
  std::mt19937 g(61);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    const double x = d(g), y = d(g);
    const double u = periodic_potential(kDefault, x, y);
    EXPECT_NEAR(periodic_potential(kDefault, x + 2 * kPi, y), u, 1e-12 * std::max(1.0, std::abs(u)));
    EXPECT_NEAR(periodic_potential(kDefault, x, y + 2 * kPi), u, 1e-12 * std::max(1.0, std::abs(u)));
  }
}

TEST(Periodic, HandDerivativesAgainstFiniteDifferences) {
  std::mt19937 g(62);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const PeriodicParams p{0.6, 0.8, 1.0, 2.5};
  const double h = 1e-4;
  for (int k = 0; k < 100; ++k) {
    const double x = d(g), y = d(g);
    const TauJet j = periodic_tau(p, x, y);
    auto v = [&](double a, double b) { return periodic_tau(p, a, b).v; };
    EXPECT_NEAR(j.x, (v(x + h, y) - v(x - h, y)) / (2 * h), 1e-7);
    EXPECT_NEAR(j.y, (v(x, y + h) - v(x, y - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(j.xx, (v(x + h, y) - 2 * j.v + v(x - h, y)) / (h * h), 1e-5);
    EXPECT_NEAR(j.yy, (v(x, y + h) - 2 * j.v + v(x, y - h)) / (h * h), 1e-5);
  }
}

TEST(Periodic, TauMinimum) {
  const double m = periodic_tau_min(kDefault, {-kPi, kPi, -kPi, kPi, 401});
  EXPECT_GE(m, 0.5 - 1e-12);
  EXPECT_NEAR(m, 0.5, 1e-12);
}

TEST(Periodic, KernelResidualIsSecondOrder) {
  const Lattice grid{0.3, kPi - 0.3, 0.3, kPi - 0.3, 41};
  const double r1 = fd_kernel_residual(kDefault, grid, 1e-3);
  const double r2 = fd_kernel_residual(kDefault, grid, 5e-4);
  EXPECT_LE(r1, 1e-4);
  EXPECT_GE(r1 / r2, 3.5);
}

TEST(Periodic, PlaneWaveQuadrature) {
  // ωθ must satisfy (ωθ)_x = φω_y − ωφ_y and (ωθ)_y = ωφ_x − φω_x, with ω = sin x.
  const double k = 1.0, h = 1e-5;
  for (const auto& [p, q] : {std::pair{0.6, 0.8}, {0.0, 1.0}, {1.0, 0.0}, {-0.8, 0.6}}) {
    const double x = 0.7, y = -0.4;
    auto wt = [&](double a, double b) { return std::sin(k * a) * plane_wave_theta(k, p, q, 0.0, a, b); };
    const std::complex<double> I(0, 1);
    const std::complex<double> phi = std::exp(I * (p * x + q * y));
    const std::complex<double> gx = (wt(x + h, y) - wt(x - h, y)) / (2 * h);
    const std::complex<double> gy = (wt(x, y + h) - wt(x, y - h)) / (2 * h);
    EXPECT_LT(std::abs(gx - (-std::sin(k * x) * I * q * phi)), 1e-8) << p << "," << q;
    EXPECT_LT(std::abs(gy - (std::sin(k * x) * I * p * phi - phi * k * std::cos(k * x))), 1e-8) << p << "," << q;
  }
}

TEST(Periodic, SuperposedPlaneWavesAreZeroModes) {
  auto u = [](double x, double y) { return periodic_potential(kDefault, x, y); };
  const Lattice grid{0.4, 1.2, 0.4, 1.2, 9};
  for (const auto& [p, q] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {-0.6, 0.8}}) {
    auto psi = [&](double x, double y) { return periodic_basis_member(kDefault, p, q, x, y, 0.3, -0.2); };
    EXPECT_LE(fd_residual(psi, u, grid, 1e-3), 1e-4) << p << "," << q;
  }
  EXPECT_THROW(periodic_basis_member(kDefault, 0.5, 0.5, 1.0, 1.0), std::invalid_argument);
}

TEST(Periodic, SuperposeCollapse) {
  const std::complex<double> w3(0.3, 0.1);
  EXPECT_EQ(superpose_values(1.0, 2.0, w3, 0.5, 0.5, 4.0), w3);
}

TEST(Periodic, PsiIsBoundedAndSmooth) {
  for (double x = -kPi; x <= kPi; x += 0.1) {
    for (double y = -kPi; y <= kPi; y += 0.1) EXPECT_LE(std::abs(periodic_psi1(kDefault, x, y)), 2.0 + 1e-12);
  }
}
