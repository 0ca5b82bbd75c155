#pragma once

#include <string>
#include <vector>

#include "moutard/construction.hpp"
#include "moutard/ratfun.hpp"

namespace moutard::catalog {

/// A reference static example: seeds, the integration constant that
/// reproduces the reference τ, and the reference fields. Polynomials are stored
/// as parse_tripoly() text in the variables of the reference formulas.
struct StaticExample {
  std::string name;
  std::string p1;
  std::string p2;
  Rational C;
  std::string u_numerator;  ///< u = u_numerator / G²
  std::string G;
  std::string psi1_numerator;  ///< ψ₁ ∝ psi1_numerator / G
  std::string psi2_numerator;
  double u_decay;  ///< claimed exponent of |u| at infinity
  double psi_decay;

  HarmonicSeed seed1() const;
  HarmonicSeed seed2() const;
  RatFun reference_u() const;
  RatFun reference_psi1() const;
  RatFun reference_psi2() const;
  TriPoly reference_G() const;
};

/// Harmonic quadratics: decay r⁻⁶ (potential) and r⁻² (zero modes).
const StaticExample& ord2();
/// Harmonic cubics: decay r⁻⁸ and r⁻³.
const StaticExample& ord3();
/// Lookup by name ("ord2", "ord3"); throws std::invalid_argument.
const StaticExample& static_example(const std::string& name);

/// The finite-time blow-up solution of the NV equation.
struct BlowupExample {
  std::string p1 = "i*z^2";
  std::string p2 = "z^2 + (1+i)*z";
  Rational C{-20};
  /// U = H1 / H2 with H2 = H2_base².
  std::string H1 =
      "-12*(24*t*x^2 + 12*t*x + 24*t*y^2 + 12*t*y + x^5 - 3*x^4*y + 2*x^4 - 2*x^3*y^2 - 4*x^3*y"
      " - 2*x^2*y^3 - 60*x^2 - 3*x*y^4 - 4*x*y^3 - 30*x + y^5 + 2*y^4 - 60*y^2 - 30*y)";
  std::string H2_base = "3*x^4 + 4*x^3 + 6*x^2*y^2 + 3*y^4 + 4*y^3 + 30 - 12*t";

  RatFun reference_U() const;
};

const BlowupExample& blowup();

}  // namespace moutard::catalog
