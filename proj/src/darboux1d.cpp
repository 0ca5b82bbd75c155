#include "moutard/darboux1d.hpp"

#include <sstream>
#include <stdexcept>

#include "moutard/errors.hpp"

namespace moutard {

Poly1D::Poly1D(GaussianRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly1D::Poly1D(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly1D::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly1D& Poly1D::operator+=(const Poly1D& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly1D& Poly1D::operator-=(const Poly1D& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly1D operator*(const Poly1D& a, const Poly1D& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return Poly1D(std::move(out));
}

Poly1D Poly1D::operator-() const {
  Poly1D r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly1D Poly1D::derive() const {
  std::vector<GaussianRational> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
  return Poly1D(std::move(out));
}

GaussianRational Poly1D::evaluate(const GaussianRational& x) const {
  GaussianRational v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    v *= x;
    v += *it;
  }
  return v;
}

std::string Poly1D::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    GaussianRational c = c_[k];
    const bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == GaussianRational(1);
    if (k == 0 || !unit) out << (c.is_real() ? c.to_string() : "(" + c.to_string() + ")");
    if (k > 0) out << (unit ? "" : "*") << "x" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.str();
}

RatFun1D::RatFun1D(Poly1D num) : num_(std::move(num)) {}

RatFun1D::RatFun1D(Poly1D num, Poly1D den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun1D: zero denominator");
  normalize();
}

// Cancels the common power of x and makes the denominator monic; cheap
// and keeps rational solitons readable (6/x² rather than 6x⁴/x⁶).
void RatFun1D::normalize() {
  if (num_.is_zero()) {
    den_ = Poly1D(1);
    return;
  }
  std::size_t shift = 0;
  while (num_.coeffs()[shift].is_zero() && den_.coeffs()[shift].is_zero()) ++shift;
  const GaussianRational lead = den_.coeffs().back();
  auto rescale = [&](const Poly1D& p) {
    std::vector<GaussianRational> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end());
    for (auto& v : c) v /= lead;
    return Poly1D(std::move(c));
  };
  num_ = rescale(num_);
  den_ = rescale(den_);
}

RatFun1D operator+(const RatFun1D& a, const RatFun1D& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFun1D operator-(const RatFun1D& a, const RatFun1D& b) { return a + (-b); }

RatFun1D operator*(const RatFun1D& a, const RatFun1D& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFun1D operator/(const RatFun1D& a, const RatFun1D& b) {
  if (b.is_zero()) throw std::domain_error("RatFun1D: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFun1D RatFun1D::derive(unsigned order) const {
  RatFun1D r = *this;
  for (unsigned k = 0; k < order; ++k) {
    if (r.den_.degree() == 0) {
      r.num_ = r.num_.derive();
    } else {
      r = RatFun1D(r.num_.derive() * r.den_ - r.num_ * r.den_.derive(), r.den_ * r.den_);
    }
  }
  return r;
}

GaussianRational RatFun1D::evaluate(const GaussianRational& x) const {
  const GaussianRational d = den_.evaluate(x);
  if (d.is_zero()) throw PoleError("RatFun1D: pole at x = " + x.to_string());
  return num_.evaluate(x) / d;
}

std::string RatFun1D::to_string() const {
  if (den_ == Poly1D(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun1D schrodinger_1d(const RatFun1D& u, const RatFun1D& psi) { return u * psi - psi.derive(2); }

RatFun1D darboux_transform(const RatFun1D& u, const RatFun1D& omega) {
  if (omega.is_zero()) throw NotInKernel("omega is identically zero");
  const RatFun1D r = schrodinger_1d(u, omega);
  if (!r.is_zero()) throw NotInKernel("(-d^2/dx^2 + u) omega = " + r.to_string());
  const RatFun1D v = omega.derive() / omega;
  return v * v - v.derive();
}

RatFun1D darboux_eigenmap(const RatFun1D& phi, const RatFun1D& omega) {
  return -phi.derive() + omega.derive() / omega * phi;
}

Poly1D adler_moser_theta(int n, const Rational& tau2, const Rational& tau3) {
  using G = GaussianRational;
  switch (n) {
    case 1:
      return Poly1D::x();
    case 2:
      return Poly1D({G(tau2), 0, 0, 1});
    case 3:
      return Poly1D({G(Rational(-5 * tau2 * tau2)), G(tau3), 0, G(Rational(5 * tau2)), 0, 0, 1});
    default:
      throw Unsupported("Adler-Moser theta_n is tabulated only for n = 1, 2, 3 (got " + std::to_string(n) + ")");
  }
}

RatFun1D adler_moser_potential(int n, const Rational& tau2, const Rational& tau3) {
  const Poly1D th = adler_moser_theta(n, tau2, tau3);
  const RatFun1D v = RatFun1D(th.derive(), th);
  return RatFun1D(-2) * v.derive();
}

ReductionReport moutard_reduction_check(const RatFun1D& u, const ExpRat1D& f, const Rational& a, const ExpRat1D& g,
                                        const Rational& b) {
  if (sgn(a + b) == 0) throw std::invalid_argument("moutard_reduction_check: a + b must be nonzero");
  auto eigen = [&u](const ExpRat1D& e, const Rational& s) {
    // (−d² + u)(F e^{κx}) = (−F″ − 2κF′ − κ²F + uF) e^{κx}.
    const RatFun1D k(Poly1D(e.kappa));
    const RatFun1D lhs = -e.f.derive(2) - RatFun1D(2) * k * e.f.derive() - k * k * e.f + u * e.f;
    return lhs == RatFun1D(Poly1D(GaussianRational(s * s))) * e.f;
  };
  ReductionReport rep;
  rep.f_eigen = eigen(f, a);
  rep.g_eigen = eigen(g, b);

  const RatFun1D inv_ab(Poly1D(GaussianRational(Rational(1) / (a + b))));
  const ExpRat1D g1 = g.derive();
  // h = (g′ − (f′/f)g)/(a + b), carried with exponent κ_g.
  const ExpRat1D h{(g1.f - f.log_derivative() * g.f) * inv_ab, g.kappa};
  const ExpRat1D fh = f * h;
  const ExpRat1D rhs = RatFun1D(Poly1D(GaussianRational(a - b))) * (f * g);
  rep.x_component = fh.derive().f == rhs.f && fh.kappa == rhs.kappa;

  // A g with ω = f e^{κ_f x}: −g′ + (ω′/ω) g, all sharing the factor e^{κ_g x}.
  const RatFun1D ag = -g1.f + f.log_derivative() * g.f;
  rep.darboux_form = h.f == -(ag * inv_ab);
  return rep;
}

}  // namespace moutard
