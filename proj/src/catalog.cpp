#include "moutard/catalog.hpp"

#include <stdexcept>

#include "moutard/parse.hpp"

namespace moutard::catalog {

HarmonicSeed StaticExample::seed1() const { return HarmonicSeed(parse_tripoly(p1)); }
HarmonicSeed StaticExample::seed2() const { return HarmonicSeed(parse_tripoly(p2)); }
TriPoly StaticExample::reference_G() const { return parse_tripoly(G); }

RatFun StaticExample::reference_u() const {
  return RatFun(parse_tripoly(u_numerator), {RatFun::Factor{reference_G(), 2}});
}

RatFun StaticExample::reference_psi1() const { return RatFun(parse_tripoly(psi1_numerator), reference_G()); }
RatFun StaticExample::reference_psi2() const { return RatFun(parse_tripoly(psi2_numerator), reference_G()); }

const StaticExample& ord2() {
  static const StaticExample ex{
      "ord2",
      "(1 - i/4)*z^2 + z/2",
      "(3 - 5*i)/4*z^2 + (1 - i)/2*z",
      Rational(-20),
      "-5120*(1 + 8*x + 2*y + 17*x^2 + 17*y^2)",
      "160 + 4*x^2 + 4*y^2 + 16*x^3 + 4*x^2*y + 16*x*y^2 + 4*y^3 + 17*(x^2+y^2)^2",
      "x + 2*x^2 + x*y - 2*y^2",
      "2*x + 2*y + 3*x^2 + 10*x*y - 3*y^2",
      -6.0,
      -2.0,
  };
  return ex;
}

const StaticExample& ord3() {
  static const StaticExample ex{
      "ord3",
      "(i - 1)*z^3 + (1/10 + 3/20*i)*z^2 + z/2",
      "2*i*z^3 + (1/4 + i/20)*z^2 + (1 - i)/2*z",
      Rational(-200),
      "-1280000*(25 + 20*x - 287*x^2 + 60*x^3 + 1800*x^4 - 30*y - 600*x*y - 300*x^2*y"
      " + 313*y^2 + 60*x*y^2 + 3600*x^2*y^2 - 300*y^3 + 1800*y^4)",
      "40000 + 100*x^2 + 40*x^3 - 387*x^4 + 40*x^5 + 800*x^6 - 60*x^2*y - 800*x^3*y - 200*x^4*y"
      " + 100*y^2 + 40*x*y^2 + 26*x^2*y^2 + 80*x^3*y^2 + 2400*x^4*y^2 - 60*y^3 - 800*x*y^3"
      " - 400*x^2*y^3 + 413*y^4 + 40*x*y^4 + 2400*x^2*y^4 - 200*y^5 + 800*y^6",
      "-10*x - 2*x^2 + 20*x^3 + 6*x*y + 60*x^2*y + 2*y^2 - 60*x*y^2 - 20*y^3",
      "-10*x - 5*x^2 - 10*y + 2*x*y + 120*x^2*y + 5*y^2 - 40*y^3",
      -8.0,
      -3.0,
  };
  return ex;
}

const StaticExample& static_example(const std::string& name) {
  if (name == "ord2") return ord2();
  if (name == "ord3") return ord3();
  throw std::invalid_argument("unknown example '" + name + "' (expected ord2 or ord3)");
}

RatFun BlowupExample::reference_U() const {
  return RatFun(parse_tripoly(H1), {RatFun::Factor{parse_tripoly(H2_base), 2}});
}

const BlowupExample& blowup() {
  static const BlowupExample ex;
  return ex;
}

}  // namespace moutard::catalog
