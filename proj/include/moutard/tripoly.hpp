#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moutard/gaussian_rational.hpp"

namespace moutard {

/// Formal variables. `zbar` is the independent variable w standing for z̄.
enum class Var { z, zbar, t };

/// Exponent triple (e_z, e_w, e_t).
struct Exponents {
  std::uint32_t ez = 0;
  std::uint32_t ew = 0;
  std::uint32_t et = 0;

  std::uint32_t of(Var v) const { return v == Var::z ? ez : v == Var::zbar ? ew : et; }
  std::uint32_t total() const { return ez + ew + et; }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Sparse polynomial in z, w (= z̄) and t with Gaussian-rational
/// coefficients. Terms are kept sorted by packed exponent key and no stored
/// coefficient is zero.
class TriPoly {
 public:
  using Key = std::uint64_t;
  struct Term {
    Key key;
    GaussianRational coeff;
  };

  TriPoly() = default;
  TriPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  TriPoly(long c) : TriPoly(GaussianRational(c)) {}  // NOLINT

  static TriPoly monomial(Exponents e, GaussianRational c = 1);
  static TriPoly z() { return monomial({1, 0, 0}); }
  static TriPoly zbar() { return monomial({0, 1, 0}); }
  static TriPoly t() { return monomial({0, 0, 1}); }
  /// x = (z + w)/2 and y = (z − w)/(2i) as polynomials in z, w.
  static TriPoly x();
  static TriPoly y();

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static TriPoly from_terms(std::vector<std::pair<Exponents, GaussianRational>> terms);

  static Key pack(Exponents e) {
    return (static_cast<Key>(e.ez) << 42) | (static_cast<Key>(e.ew) << 21) | e.et;
  }
  static Exponents unpack(Key k) {
    return {static_cast<std::uint32_t>(k >> 42), static_cast<std::uint32_t>((k >> 21) & kFieldMask),
            static_cast<std::uint32_t>(k & kFieldMask)};
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  /// Coefficient of the given monomial (zero when absent).
  GaussianRational coefficient(Exponents e) const;
  GaussianRational constant_term() const { return coefficient({}); }

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  /// Coefficient of the term with the largest packed key.
  const GaussianRational& leading_coefficient() const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const GaussianRational& c);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const GaussianRational& c) { return a *= c; }
  friend TriPoly operator*(const GaussianRational& c, TriPoly a) { return a *= c; }
  TriPoly operator-() const;
  friend bool operator==(const TriPoly& a, const TriPoly& b);

  TriPoly pow(unsigned n) const;

  /// Formal partial derivative; Var::zbar differentiates in w.
  TriPoly derive(Var v, unsigned order = 1) const;
  /// Termwise antiderivative with zero constant of integration, so every
  /// term of the result contains the integration variable.
  TriPoly antiderivative(Var v) const;
  /// σ: swap z ↔ w exponents and conjugate coefficients.
  TriPoly conjugate() const;
  bool is_sigma_fixed() const { return conjugate() == *this; }

  /// Substitutes t = value exactly.
  TriPoly at_time(const Rational& value) const;
  /// Keeps only the terms of the given total (z, w) degree, all t powers.
  TriPoly homogeneous_part(std::uint32_t zw_degree) const;

  /// Floating evaluation at independent complex z, w and real t.
  std::complex<double> evaluate(std::complex<double> z, std::complex<double> w, double t) const;
  /// Evaluation at the physical point z = x + iy, w = x − iy.
  std::complex<double> evaluate_xy(double x, double y, double t = 0.0) const;
  /// Σ |c|·|monomial| at the physical point: the magnitude scale used by
  /// pole detection.
  double magnitude_scale(double x, double y, double t = 0.0) const;

  /// Human-readable form, e.g. "(1-1/4i)*z^2 + 1/2*z".
  std::string to_string() const;
  /// The term with the largest key, formatted like to_string.
  std::string leading_term_string() const;

 private:
  static constexpr Key kFieldMask = (Key{1} << 21) - 1;
  std::vector<Term> terms_;
};

}  // namespace moutard
