#include <gtest/gtest.h>

#include <cmath>

#include "moutard/catalog.hpp"
#include "moutard/construction.hpp"
#include "moutard/errors.hpp"
#include "moutard/parse.hpp"

using namespace moutard;

namespace {

HarmonicSeed seed(const char* s) { return HarmonicSeed(parse_tripoly(s)); }

}  // namespace

TEST(Seeds, RejectNonHolomorphicInput) {
  EXPECT_THROW(seed("z*w"), NotHolomorphic);
  EXPECT_THROW(seed("t*z"), NotHolomorphic);
  EXPECT_NO_THROW(seed("i*z^3 + 2"));
}

TEST(Seeds, HarmonicFieldIsRealAndHarmonic) {
  const TriPoly w = harmonic_from_holomorphic(seed("(2-i)*z^3 + z"));
  EXPECT_TRUE(w.is_sigma_fixed());
  EXPECT_TRUE(w.derive(Var::z).derive(Var::zbar).is_zero());
  EXPECT_EQ(harmonic_from_holomorphic(seed("z")), parse_tripoly("2*x"));
}

TEST(Bracket, IsAntisymmetricAndSigmaAntifixed) {
  const TriPoly p1 = parse_tripoly("(1+i)*z^3 + z"), p2 = parse_tripoly("i*z^2 - 3*z");
  const TriPoly b = moutard_bracket(p1, p2);
  EXPECT_EQ(moutard_bracket(p2, p1), -b);
  EXPECT_EQ(b.conjugate(), -b);
  EXPECT_TRUE(moutard_bracket(p1, p1).is_zero());
}

// ∂τ = i(ω₂∂ω₁ − ω₁∂ω₂): the closed-form quadrature of the Moutard 1-form.
TEST(Bracket, DifferentialMatchesQuadratureForm) {
  const HarmonicSeed s1 = seed("(1+i)*z^3 + z/2"), s2 = seed("i*z^2 - 3*z");
  const TriPoly w1 = harmonic_from_holomorphic(s1), w2 = harmonic_from_holomorphic(s2);
  const TriPoly tau = moutard_tau(s1, s2, Rational(5));
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(tau.derive(Var::z), (w2 * w1.derive(Var::z) - w1 * w2.derive(Var::z)) * i);
  EXPECT_EQ(tau.derive(Var::zbar), (w2 * w1.derive(Var::zbar) - w1 * w2.derive(Var::zbar)) * -i);
}

TEST(Theta, DegenerateSeed) {
  EXPECT_THROW(moutard_theta(seed("i"), seed("z"), Rational(1)), DegenerateSeed);
}

TEST(Theta, ThetaFamilyShiftsByConstantOverOmega) {
  const HarmonicSeed s1 = seed("z^2 + z"), s2 = seed("i*z^2");
  const RatFun d = moutard_theta(s1, s2, Rational(3)) - moutard_theta(s1, s2, Rational(0));
  EXPECT_TRUE(equal(d, RatFun(TriPoly(3), harmonic_from_holomorphic(s1))));
}

TEST(Example, Order2Reproduction) {
  const auto& ex = catalog::ord2();
  const ConstantFit fit = fit_constant(ex.seed1(), ex.seed2(), ex.reference_G());
  EXPECT_EQ(fit.C, Rational(-20));
  EXPECT_EQ(fit.scale, GaussianRational(Rational(-1, 8)));
  const MoutardResult r = two_step_construct(ex.seed1(), ex.seed2(), ex.C);
  EXPECT_TRUE(equal(r.u, ex.reference_u()));
  EXPECT_EQ(proportional(r.psi1, ex.reference_psi1()), GaussianRational(-8));
  EXPECT_EQ(proportional(r.psi2, ex.reference_psi2()), GaussianRational(4));
  EXPECT_TRUE(verify_kernel(r.u, r.psi1));
  EXPECT_TRUE(verify_kernel(r.u, r.psi2));
}

TEST(Example, Order3Reproduction) {
  const auto& ex = catalog::ord3();
  const ConstantFit fit = fit_constant(ex.seed1(), ex.seed2(), ex.reference_G());
  EXPECT_EQ(fit.C, Rational(-200));
  const MoutardResult r = two_step_construct(ex.seed1(), ex.seed2(), ex.C);
  EXPECT_TRUE(equal(r.u, ex.reference_u()));
  EXPECT_TRUE(proportional(r.psi1, ex.reference_psi1()));
  EXPECT_TRUE(proportional(r.psi2, ex.reference_psi2()));
  EXPECT_TRUE(verify_kernel(r.u, r.psi1));
  EXPECT_TRUE(verify_kernel(r.u, r.psi2));
}

TEST(Example, WrongConstantBreaksTheReferencePotential) {
  const auto& ex = catalog::ord2();
  const MoutardResult r = two_step_construct(ex.seed1(), ex.seed2(), Rational(-21));
  EXPECT_FALSE(equal(r.u, ex.reference_u()));
  // The kernel identities hold for every C.
  EXPECT_TRUE(verify_kernel(r.u, r.psi1));
}

TEST(Example, FitFailsForUnrelatedTarget) {
  const auto& ex = catalog::ord2();
  EXPECT_THROW(fit_constant(ex.seed1(), ex.seed2(), parse_tripoly("1 + x^2")), FitError);
}

TEST(Kernel, PerturbedPsiFails) {
  const auto& ex = catalog::ord2();
  const MoutardResult r = two_step_construct(ex.seed1(), ex.seed2(), ex.C);
  EXPECT_FALSE(verify_kernel(r.u, r.psi1 + RatFun(TriPoly(1))));
}

TEST(Decay, ExponentsOfBothExamples) {
  for (const auto* ex : {&catalog::ord2(), &catalog::ord3()}) {
    const MoutardResult r = two_step_construct(ex->seed1(), ex->seed2(), ex->C);
    EXPECT_NEAR(estimate_decay(r.u, 1e2, 1e5, 8), ex->u_decay, 0.1) << ex->name;
    EXPECT_NEAR(estimate_decay(r.psi1, 1e2, 1e5, 8), ex->psi_decay, 0.05) << ex->name;
    EXPECT_NEAR(estimate_decay(r.psi2, 1e2, 1e5, 8), ex->psi_decay, 0.05) << ex->name;
  }
  EXPECT_THROW(estimate_decay(RatFun(TriPoly(1)), 10.0, 1.0, 8), std::invalid_argument);
}

TEST(Nonvanishing, ReferenceDenominatorsArePositive) {
  // Oracle: brute-force grid plus local minimization gives min G = 160 at
  // the origin (order 2) and 40000 (order 3).
  const NonvanishingReport r2 = certify_nonvanishing(catalog::ord2().reference_G());
  EXPECT_TRUE(r2.certified);
  EXPECT_NEAR(r2.grid_min, 160.0, 1e-6);
  EXPECT_NEAR(r2.argmin_x, 0.0, 1e-4);
  const NonvanishingReport r3 = certify_nonvanishing(catalog::ord3().reference_G());
  EXPECT_TRUE(r3.certified);
  EXPECT_NEAR(r3.grid_min, 40000.0, 1e-3);
}

TEST(Nonvanishing, NegativeMultipleIsNormalized) {
  const NonvanishingReport r = certify_nonvanishing(catalog::ord2().reference_G() * GaussianRational(Rational(-1, 8)));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.sign, -1);
  EXPECT_NEAR(r.grid_min, 20.0, 1e-7);
}

TEST(Nonvanishing, FindsZeros) {
  const NonvanishingReport circle = certify_nonvanishing(parse_tripoly("x^2 + y^2 - 4"));
  EXPECT_FALSE(circle.certified);
  ASSERT_TRUE(circle.zero);
  EXPECT_NEAR(std::hypot(circle.zero->first, circle.zero->second), 2.0, 1e-6);

  const NonvanishingReport saddle = certify_nonvanishing(parse_tripoly("x^2 - y^2 + 1"));
  EXPECT_FALSE(saddle.certified);
  ASSERT_TRUE(saddle.zero);
  EXPECT_NEAR(parse_tripoly("x^2 - y^2 + 1").evaluate_xy(saddle.zero->first, saddle.zero->second).real(), 0.0,
              1e-6);
}
