#include <gtest/gtest.h>

#include <random>

#include "moutard/darboux1d.hpp"
#include "moutard/errors.hpp"

using namespace moutard;

namespace {

const RatFun1D kInvX2(Poly1D(1), Poly1D::x() * Poly1D::x());

Poly1D P(std::initializer_list<long> c) { return Poly1D(std::vector<GaussianRational>(c.begin(), c.end())); }

Rational random_rational(std::mt19937& g) {
  std::uniform_int_distribution<int> n(-9, 9), d(1, 7);
  return ratio(n(g), d(g));
}

}  // namespace

TEST(Poly1D, Arithmetic) {
  const Poly1D p = P({1, 2, 3}), q = P({-1, 1});
  EXPECT_EQ(p * q, P({-1, -1, -1, 3}));
  EXPECT_EQ(p.derive(), P({2, 6}));
  EXPECT_EQ(p.evaluate(GaussianRational(2)), GaussianRational(17));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(P({-5, 2, 0, 1}).to_string(), "x^3 + 2*x - 5");
}

TEST(RatFun1D, CrossMultiplicationEquality) {
  const RatFun1D a(P({0, 0, 6}), P({0, 0, 0, 0, 1}));
  EXPECT_EQ(a, RatFun1D(6) * kInvX2);
  EXPECT_EQ((a / a), RatFun1D(1));
  EXPECT_THROW(RatFun1D(Poly1D(1), Poly1D()), std::domain_error);
  EXPECT_THROW(kInvX2.evaluate(GaussianRational(0)), PoleError);
}

TEST(Darboux, FreeParticleToFirstSoliton) {
  EXPECT_EQ(darboux_transform(RatFun1D(0), RatFun1D(Poly1D::x())), RatFun1D(2) * kInvX2);
  EXPECT_EQ(darboux_transform(RatFun1D(0), RatFun1D(1)), RatFun1D(0));
}

TEST(Darboux, SecondSoliton) {
  const RatFun1D omega(P({0, 0, 0, 1}), Poly1D::x());  // θ₂/θ₁ at τ₂ = 0
  EXPECT_EQ(darboux_transform(RatFun1D(2) * kInvX2, omega), RatFun1D(6) * kInvX2);
}

TEST(Darboux, NotInKernel) {
  EXPECT_THROW(darboux_transform(RatFun1D(0), RatFun1D(P({0, 0, 1}))), NotInKernel);
}

TEST(Darboux, FactorizationIdentities) {
  // u = v² + v′ before and ũ = v² − v′ after, with v = ω′/ω.
  std::mt19937 g(51);
  for (int k = 0; k < 10; ++k) {
    const Rational t2 = random_rational(g);
    const RatFun1D u = adler_moser_potential(1);
    const RatFun1D omega(adler_moser_theta(2, t2), Poly1D::x());
    const RatFun1D v = omega.derive() / omega;
    EXPECT_EQ(u, v * v + v.derive());
    EXPECT_EQ(darboux_transform(u, omega), v * v - v.derive());
    EXPECT_EQ(darboux_transform(u, omega), adler_moser_potential(2, t2));
  }
}

TEST(Eigenmap, KillsOmegaAndIntertwines) {
  const RatFun1D omega(Poly1D::x());
  EXPECT_TRUE(darboux_eigenmap(omega, omega).is_zero());
  EXPECT_EQ(darboux_eigenmap(RatFun1D(P({0, 0, 0, 1})), omega), RatFun1D(P({0, 0, -2})));
  // φ = 1/x is a zero mode of −d² + 2/x²; its image under ω = x² is one of −d² + 6/x².
  const RatFun1D u1 = RatFun1D(2) * kInvX2;
  const RatFun1D phi(Poly1D(1), Poly1D::x());
  ASSERT_TRUE(schrodinger_1d(u1, phi).is_zero());
  const RatFun1D omega1(P({0, 0, 1}));
  const RatFun1D img = darboux_eigenmap(phi, omega1);
  EXPECT_EQ(img, RatFun1D(3) * kInvX2);
  EXPECT_TRUE(schrodinger_1d(darboux_transform(u1, omega1), img).is_zero());
}

TEST(Darboux, NonKernelSeedIsRejected) {
  // φ = x³ is not annihilated by −d²: it cannot serve as ω for u = 0.
  const RatFun1D phi(P({0, 0, 0, 1}));
  EXPECT_FALSE(schrodinger_1d(RatFun1D(0), phi).is_zero());
  EXPECT_THROW(darboux_transform(RatFun1D(0), phi), NotInKernel);
}

TEST(AdlerMoser, Table) {
  EXPECT_EQ(adler_moser_theta(1), Poly1D::x());
  EXPECT_EQ(adler_moser_theta(2, 5), P({5, 0, 0, 1}));
  EXPECT_EQ(adler_moser_theta(3, 1, 2), P({-5, 2, 0, 5, 0, 0, 1}));
  EXPECT_THROW(adler_moser_theta(4), Unsupported);
  EXPECT_THROW(adler_moser_theta(0), Unsupported);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(adler_moser_theta(n, 3, 4).degree(), n * (n + 1) / 2);
    EXPECT_EQ(adler_moser_potential(n), RatFun1D(n * (n + 1)) * kInvX2);
  }
}

TEST(AdlerMoser, ConsecutiveRatiosAreZeroModes) {
  std::mt19937 g(52);
  for (int k = 0; k < 20; ++k) {
    const Rational t2 = random_rational(g), t3 = random_rational(g);
    for (int n = 1; n <= 2; ++n) {
      const RatFun1D phi(adler_moser_theta(n + 1, t2, t3), adler_moser_theta(n, t2, t3));
      EXPECT_TRUE(schrodinger_1d(adler_moser_potential(n, t2, t3), phi).is_zero()) << n;
    }
  }
}

TEST(Reduction, SeparatedMoutardStep) {
  using G = GaussianRational;
  const G I = G::i();
  const RatFun1D u = RatFun1D(2) * kInvX2;
  const ExpRat1D f{RatFun1D(Poly1D(std::vector<G>{I, 1}), Poly1D::x()), I};  // H₀f = f
  const struct {
    ExpRat1D g;
    long b;
  } cases[] = {
      {{RatFun1D(P({0, 0, 1})), G(0)}, 0},                       // E = 0, g = x²
      {{RatFun1D(Poly1D(1), Poly1D::x()), G(0)}, 0},                  // E = 0, g = 1/x
      {{RatFun1D(Poly1D(std::vector<G>{I * G(Rational(1, 2)), 1}), Poly1D::x()), I * G(2)}, 2},  // E = 4
  };
  for (const auto& c : cases) {
    const ReductionReport r = moutard_reduction_check(u, f, 1, c.g, c.b);
    EXPECT_TRUE(r.f_eigen);
    EXPECT_TRUE(r.g_eigen);
    EXPECT_TRUE(r.x_component);
    EXPECT_TRUE(r.darboux_form);
  }
  // A wrong eigenvalue is caught.
  EXPECT_FALSE(moutard_reduction_check(u, f, 1, cases[0].g, 1).g_eigen);
  EXPECT_THROW(moutard_reduction_check(u, f, 1, cases[0].g, -1), std::invalid_argument);
}
