#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "moutard/catalog.hpp"
#include "moutard/errors.hpp"
#include "moutard/nv.hpp"
#include "moutard/parse.hpp"
#include "random_poly.hpp"

using namespace moutard;

namespace {

FlowingSeed flowing(const char* s) { return flow_solve(HarmonicSeed(parse_tripoly(s))); }

TriPoly blowup_phi() {
  const auto& b = catalog::blowup();
  return extended_tau(flowing(b.p1.c_str()), flowing(b.p2.c_str()), b.C);
}

}  // namespace

TEST(Flow, SolvesThirdOrderFlow) {
  const FlowingSeed p = flowing("z^7 + i*z^4 - z");
  EXPECT_EQ(p.p().derive(Var::t), p.p().derive(Var::z, 3));
  EXPECT_EQ(p.p().at_time(Rational(0)), parse_tripoly("z^7 + i*z^4 - z"));
  EXPECT_EQ(flowing("z^3").p(), parse_tripoly("z^3 + 6*t"));
  EXPECT_EQ(flowing("z^2 + z").p(), parse_tripoly("z^2 + z"));
}

TEST(Flow, ValidatesSeeds) {
  EXPECT_THROW(FlowingSeed(parse_tripoly("z^3")), NotOnFlow);
  EXPECT_THROW(FlowingSeed(parse_tripoly("z*w")), NotHolomorphic);
  EXPECT_NO_THROW(FlowingSeed(parse_tripoly("z^3 + 6*t")));
}

TEST(Conventions, PotentialConversion) {
  const RatFun U(parse_tripoly("x"), parse_tripoly("1 + y^2"));
  const RatFun u = convert_potential(U, SchrodingerConvention::wirtinger, SchrodingerConvention::laplacian);
  EXPECT_TRUE(equal(u, U * RatFun(TriPoly(-4))));
  EXPECT_TRUE(equal(convert_potential(u, SchrodingerConvention::laplacian, SchrodingerConvention::wirtinger), U));
}

TEST(Blowup, ExtendedTauAndReferencePotential) {
  const TriPoly phi = blowup_phi();
  EXPECT_TRUE(phi.is_sigma_fixed());
  EXPECT_EQ(phi.derive(Var::t), TriPoly(8));
  const NVSolution sol = nv_fields(phi);
  EXPECT_TRUE(equal(sol.U, catalog::blowup().reference_U()));
  EXPECT_TRUE(nv_residual(sol).is_zero());
  // The opposite sign convention does not annihilate the same solution.
  EXPECT_FALSE(nv_residual(sol, -kNvSign).is_zero());
}

TEST(Blowup, StaticPartMatchesStaticConstruction) {
  const auto& b = catalog::blowup();
  const TriPoly phi = blowup_phi();
  const TriPoly tau = moutard_tau(HarmonicSeed(parse_tripoly(b.p1)), HarmonicSeed(parse_tripoly(b.p2)), b.C);
  EXPECT_EQ(phi.at_time(Rational(0)), tau);
}

TEST(Blowup, DecayAtTimeZero) {
  const NVSolution sol = nv_fields(blowup_phi());
  const RatFun u0(sol.U.num().at_time(Rational(0)), sol.U.den().at_time(Rational(0)));
  EXPECT_NEAR(estimate_decay(u0, 1e2, 1e5, 8), -3.0, 0.05);
}

TEST(Blowup, TimeAndWitnesses) {
  const BlowupResult r = blowup_time(blowup_phi());
  ASSERT_TRUE(r.t_star_exact);
  EXPECT_EQ(*r.t_star_exact, Rational(29, 12));
  EXPECT_NEAR(r.t_star, 29.0 / 12.0, 1e-12);
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_NEAR(r.witnesses[0].first, -1.0, 1e-6);
  EXPECT_NEAR(r.witnesses[0].second, 0.0, 1e-6);
  EXPECT_NEAR(r.witnesses[1].first, 0.0, 1e-6);
  EXPECT_NEAR(r.witnesses[1].second, -1.0, 1e-6);
}

TEST(Blowup, BruteForceGridOracle) {
  // Independent oracle: the smallest t with a real zero is min over the
  // plane of (Φ(x, y, 0)·sign)/speed, scanned on a fine grid.
  const TriPoly g = blowup_phi().at_time(Rational(0)) * GaussianRational(-1);
  double best = 1e300;
  for (int i = 0; i <= 1200; ++i) {
    for (int j = 0; j <= 1200; ++j) {
      best = std::min(best, g.evaluate_xy(-3.0 + 0.005 * i, -3.0 + 0.005 * j).real());
    }
  }
  EXPECT_NEAR(best / 8.0, 29.0 / 12.0, 1e-6);
}

TEST(Blowup, SingularSetAppearsAfterBlowup) {
  const TriPoly phi = blowup_phi();
  const Window w{-3, 3, -3, 3};
  EXPECT_TRUE(singular_set(phi, 2.0, w, 200).empty());
  const auto pts = singular_set(phi, 3.0, w, 200);
  ASSERT_FALSE(pts.empty());
  for (const auto& [x, y] : pts) EXPECT_LT(std::abs(phi.evaluate_xy(x, y, 3.0).real()), 0.5);
}

TEST(Blowup, Errors) {
  EXPECT_THROW(blowup_time(parse_tripoly("1 + x^2 + t^2")), NotAffineInT);
  EXPECT_THROW(blowup_time(parse_tripoly("1 + x^2 + x*t")), NotAffineInT);
  EXPECT_THROW(blowup_time(parse_tripoly("1 + x^2 + t")), NoBlowup);
  const BlowupResult r = blowup_time(parse_tripoly("3 + x^2 + y^2 - 2*t"));
  ASSERT_TRUE(r.t_star_exact);
  EXPECT_EQ(*r.t_star_exact, Rational(3, 2));
}

TEST(Stationarity, Order2ExampleIsAStationaryNVSolution) {
  const auto& ex = catalog::ord2();
  const TriPoly phi = extended_tau(flow_solve(ex.seed1()), flow_solve(ex.seed2()), ex.C);
  EXPECT_FALSE(phi.depends_on(Var::t));
  const NVSolution sol = nv_fields(phi);
  EXPECT_TRUE(sol.U.derive(Var::t).is_zero());
  EXPECT_TRUE(nv_residual(sol).is_zero());
  // Consistent with the static construction: u = −4U.
  const MoutardResult r = two_step_construct(ex.seed1(), ex.seed2(), ex.C);
  EXPECT_TRUE(equal(convert_potential(sol.U, SchrodingerConvention::wirtinger, SchrodingerConvention::laplacian), r.u));
}

TEST(NV, RandomCubicPairsSolveTheEquation) {
  std::mt19937 g(21);
  for (int k = 0; k < 4; ++k) {
    const TriPoly a = testing_util::random_holomorphic(g, 3), b = testing_util::random_holomorphic(g, 3);
    const TriPoly phi = extended_tau(flow_solve(HarmonicSeed(a)), flow_solve(HarmonicSeed(b)), ratio(k - 2, 3));
    EXPECT_TRUE(phi.is_sigma_fixed());
    EXPECT_TRUE(nv_residual(nv_fields(phi)).is_zero()) << a.to_string() << " | " << b.to_string();
  }
}

TEST(NV, ExactEvaluation) {
  const TriPoly p = parse_tripoly("x^2 + y + t");
  EXPECT_EQ(evaluate_exact(p, Rational(1, 2), Rational(3), Rational(1)), GaussianRational(Rational(17, 4)));
}
