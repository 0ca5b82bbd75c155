#include "moutard/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moutard/errors.hpp"

namespace moutard {

namespace {

// Rewrites a and b over the common denominator ∏ base^max(pa, pb) and
// returns the two adjusted numerators plus the common factor list.
struct Common {
  TriPoly num_a;
  TriPoly num_b;
  std::vector<RatFun::Factor> factors;
};

Common to_common(const RatFun& a, const RatFun& b) {
  Common c{a.num(), b.num(), {}};
  std::vector<bool> b_used(b.factors().size(), false);
  for (const auto& fa : a.factors()) {
    unsigned pb = 0;
    for (std::size_t k = 0; k < b.factors().size(); ++k) {
      if (!b_used[k] && b.factors()[k].base == fa.base) {
        pb = b.factors()[k].power;
        b_used[k] = true;
        break;
      }
    }
    const unsigned p = std::max(fa.power, pb);
    if (p > fa.power) c.num_a = c.num_a * fa.base.pow(p - fa.power);
    if (p > pb) c.num_b = c.num_b * fa.base.pow(p - pb);
    c.factors.push_back({fa.base, p});
  }
  for (std::size_t k = 0; k < b.factors().size(); ++k) {
    if (b_used[k]) continue;
    const auto& fb = b.factors()[k];
    c.num_a = c.num_a * fb.base.pow(fb.power);
    c.factors.push_back(fb);
  }
  return c;
}

}  // namespace

RatFun::RatFun(TriPoly num) : num_(std::move(num)) {}

RatFun::RatFun(TriPoly num, TriPoly den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
  add_factor(std::move(den), 1);
  if (num_.is_zero()) factors_.clear();
}

RatFun::RatFun(TriPoly num, std::vector<Factor> factors) : num_(std::move(num)) {
  for (auto& f : factors) {
    if (f.base.is_zero()) throw std::domain_error("RatFun: zero denominator factor");
    add_factor(std::move(f.base), f.power);
  }
  if (num_.is_zero()) factors_.clear();
}

void RatFun::add_factor(TriPoly base, unsigned power) {
  if (power == 0) return;
  const GaussianRational lc = base.leading_coefficient();
  GaussianRational inv_lc_pow = 1;
  for (unsigned k = 0; k < power; ++k) inv_lc_pow /= lc;
  num_ *= inv_lc_pow;
  if (base.is_constant()) return;
  base *= GaussianRational(1) / lc;
  for (auto& f : factors_) {
    if (f.base == base) {
      f.power += power;
      return;
    }
  }
  factors_.push_back({std::move(base), power});
}

TriPoly RatFun::den() const {
  TriPoly d(1);
  for (const auto& f : factors_) d = d * f.base.pow(f.power);
  return d;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Common c = to_common(*this, o);
  num_ = c.num_a + c.num_b;
  factors_ = num_.is_zero() ? std::vector<Factor>{} : std::move(c.factors);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  num_ = num_ * o.num_;
  for (const auto& f : o.factors_) add_factor(f.base, f.power);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
  if (is_zero()) return *this;
  for (const auto& f : o.factors_) num_ = num_ * f.base.pow(f.power);
  add_factor(o.num_, 1);
  return *this;
}

RatFun RatFun::derive(Var v, unsigned order) const {
  RatFun cur = *this;
  for (unsigned step = 0; step < order; ++step) {
    if (cur.is_zero()) return cur;
    // d(N/∏ f_i^k_i) = (N'·∏_dep f_j − N·Σ k_i f_i'·∏_{dep, j≠i} f_j) / ∏ f_i^(k_i + [dep_i])
    std::vector<std::size_t> dep;
    for (std::size_t k = 0; k < cur.factors_.size(); ++k) {
      if (cur.factors_[k].base.depends_on(v)) dep.push_back(k);
    }
    TriPoly dep_product(1);
    for (auto k : dep) dep_product = dep_product * cur.factors_[k].base;
    TriPoly num = cur.num_.derive(v) * dep_product;
    for (auto k : dep) {
      TriPoly others(1);
      for (auto j : dep) {
        if (j != k) others = others * cur.factors_[j].base;
      }
      const auto& f = cur.factors_[k];
      num -= cur.num_ * f.base.derive(v) * others * GaussianRational(static_cast<long>(f.power));
    }
    RatFun next;
    next.num_ = std::move(num);
    if (!next.num_.is_zero()) {
      next.factors_ = cur.factors_;
      for (auto k : dep) next.factors_[k].power += 1;
    }
    cur = std::move(next);
  }
  return cur;
}

RatFun RatFun::conjugate() const {
  RatFun r(num_.conjugate());
  if (r.is_zero()) return r;
  for (const auto& f : factors_) r.add_factor(f.base.conjugate(), f.power);
  return r;
}

std::complex<double> RatFun::evaluate(std::complex<double> z, std::complex<double> w, double t) const {
  std::complex<double> d = 1.0;
  for (const auto& f : factors_) d *= std::pow(f.base.evaluate(z, w, t), static_cast<int>(f.power));
  return num_.evaluate(z, w, t) / d;
}

std::string RatFun::to_string() const {
  if (factors_.empty()) return num_.to_string();
  std::string den;
  for (const auto& f : factors_) {
    if (!den.empty()) den += " * ";
    den += "(" + f.base.to_string() + ")";
    if (f.power > 1) den += "^" + std::to_string(f.power);
  }
  return "(" + num_.to_string() + ") / " + den;
}

bool equal(const RatFun& a, const RatFun& b) { return (a - b).is_zero(); }

std::optional<GaussianRational> proportional(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return GaussianRational(1);
    return std::nullopt;
  }
  Common c = to_common(a, b);
  const GaussianRational scale = c.num_a.leading_coefficient() / c.num_b.leading_coefficient();
  if (c.num_a == c.num_b * scale) return scale;
  return std::nullopt;
}

RatFun log_laplacian_ratio(const TriPoly& tau) {
  if (tau.is_zero()) throw ZeroTau("log_laplacian_ratio: tau is identically zero");
  TriPoly num = tau * tau.derive(Var::z).derive(Var::zbar) - tau.derive(Var::z) * tau.derive(Var::zbar);
  return RatFun(std::move(num), {RatFun::Factor{tau, 2}});
}

RatFun log_second_z_ratio(const TriPoly& tau) {
  if (tau.is_zero()) throw ZeroTau("log_second_z_ratio: tau is identically zero");
  const TriPoly tz = tau.derive(Var::z);
  TriPoly num = tau * tau.derive(Var::z, 2) - tz * tz;
  return RatFun(std::move(num), {RatFun::Factor{tau, 2}});
}

std::complex<double> evaluate_at(const RatFun& f, double x, double y, double t) {
  const std::complex<double> z{x, y};
  const std::complex<double> w{x, -y};
  std::complex<double> d = 1.0;
  for (const auto& fac : f.factors()) {
    const std::complex<double> v = fac.base.evaluate(z, w, t);
    if (std::abs(v) <= 1e-12 * fac.base.magnitude_scale(x, y, t)) {
      throw PoleError("denominator vanishes at (" + std::to_string(x) + ", " + std::to_string(y) +
                      ", t=" + std::to_string(t) + ")");
    }
    d *= std::pow(v, static_cast<int>(fac.power));
  }
  return f.num().evaluate(z, w, t) / d;
}

std::complex<double> evaluate_at(const TriPoly& p, double x, double y, double t) {
  return p.evaluate_xy(x, y, t);
}

}  // namespace moutard
