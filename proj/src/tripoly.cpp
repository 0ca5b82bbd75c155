#include "moutard/tripoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace moutard {

namespace {

bool key_less(const TriPoly::Term& a, const TriPoly::Term& b) { return a.key < b.key; }

std::vector<std::complex<double>> powers(std::complex<double> base, std::uint32_t n) {
  std::vector<std::complex<double>> out(n + 1);
  out[0] = 1.0;
  for (std::uint32_t k = 1; k <= n; ++k) out[k] = out[k - 1] * base;
  return out;
}

std::vector<double> powers(double base, std::uint32_t n) {
  std::vector<double> out(n + 1);
  out[0] = 1.0;
  for (std::uint32_t k = 1; k <= n; ++k) out[k] = out[k - 1] * base;
  return out;
}

std::string monomial_string(Exponents e) {
  std::string s;
  auto put = [&s](const char* name, std::uint32_t p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (p > 1) s += "^" + std::to_string(p);
  };
  put("z", e.ez);
  put("w", e.ew);
  put("t", e.et);
  return s;
}

std::string term_string(const TriPoly::Term& term) {
  const Exponents e = TriPoly::unpack(term.key);
  const std::string mono = monomial_string(e);
  const std::string c = term.coeff.to_string();
  if (mono.empty()) return c;
  const bool compound = !term.coeff.is_real() && sgn(term.coeff.re()) != 0;
  if (!compound && c == "1") return mono;
  if (!compound && c == "-1") return "-" + mono;
  return (compound ? "(" + c + ")" : c) + "*" + mono;
}

}  // namespace

TriPoly::TriPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

TriPoly TriPoly::monomial(Exponents e, GaussianRational c) {
  TriPoly p;
  if (!c.is_zero()) p.terms_.push_back({pack(e), std::move(c)});
  return p;
}

TriPoly TriPoly::x() {
  return (z() + zbar()) * GaussianRational(Rational(1, 2));
}

TriPoly TriPoly::y() {
  // (z − w)/(2i) = −(i/2)(z − w)
  return (z() - zbar()) * GaussianRational(Rational(0), Rational(-1, 2));
}

TriPoly TriPoly::from_terms(std::vector<std::pair<Exponents, GaussianRational>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (auto& [e, c] : terms) raw.push_back({pack(e), std::move(c)});
  std::sort(raw.begin(), raw.end(), key_less);
  TriPoly p;
  for (auto& term : raw) {
    if (!p.terms_.empty() && p.terms_.back().key == term.key) {
      p.terms_.back().coeff += term.coeff;
    } else {
      p.terms_.push_back(std::move(term));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return p;
}

GaussianRational TriPoly::coefficient(Exponents e) const {
  const Key k = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, {}}, key_less);
  if (it != terms_.end() && it->key == k) return it->coeff;
  return {};
}

std::uint32_t TriPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& term : terms_) d = std::max(d, unpack(term.key).of(v));
  return d;
}

std::uint32_t TriPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& term : terms_) d = std::max(d, unpack(term.key).total());
  return d;
}

const GaussianRational& TriPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading_coefficient of the zero polynomial");
  return terms_.back().coeff;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      out.push_back(*b++);
    } else {
      Term sum{a->key, std::move(a->coeff)};
      sum.coeff += b->coeff;
      ++a;
      ++b;
      if (!sum.coeff.is_zero()) out.push_back(std::move(sum));
    }
  }
  terms_ = std::move(out);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) { return *this += -o; }

TriPoly& TriPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].key != b.terms_[k].key || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.terms_[0].coeff;
  if (b.is_constant()) return a * b.terms_[0].coeff;

  std::unordered_map<TriPoly::Key, GaussianRational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      // Exponent fields never overflow 21 bits at the degrees used here.
      acc[ta.key + tb.key].add_product(ta.coeff, tb.coeff);
    }
  }
  TriPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({k, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), key_less);
  return r;
}

TriPoly TriPoly::pow(unsigned n) const {
  TriPoly result(1);
  TriPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

TriPoly TriPoly::derive(Var v, unsigned order) const {
  TriPoly r;
  for (const auto& term : terms_) {
    Exponents e = unpack(term.key);
    std::uint32_t& p = v == Var::z ? e.ez : v == Var::zbar ? e.ew : e.et;
    if (p < order) continue;
    long factor = 1;
    for (unsigned k = 0; k < order; ++k) factor *= static_cast<long>(p - k);
    p -= order;
    r.terms_.push_back({pack(e), term.coeff * GaussianRational(factor)});
  }
  // Derivation shifts one field uniformly, so key order is preserved.
  return r;
}

TriPoly TriPoly::antiderivative(Var v) const {
  TriPoly r;
  for (const auto& term : terms_) {
    Exponents e = unpack(term.key);
    std::uint32_t& p = v == Var::z ? e.ez : v == Var::zbar ? e.ew : e.et;
    ++p;
    r.terms_.push_back({pack(e), term.coeff / GaussianRational(static_cast<long>(p))});
  }
  return r;
}

TriPoly TriPoly::conjugate() const {
  TriPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& term : terms_) {
    Exponents e = unpack(term.key);
    std::swap(e.ez, e.ew);
    r.terms_.push_back({pack(e), term.coeff.conj()});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), key_less);
  return r;
}

TriPoly TriPoly::at_time(const Rational& value) const {
  std::vector<std::pair<Exponents, GaussianRational>> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Exponents e = unpack(term.key);
    Rational scale = 1;
    for (std::uint32_t k = 0; k < e.et; ++k) scale *= value;
    e.et = 0;
    out.emplace_back(e, term.coeff * GaussianRational(scale));
  }
  return from_terms(std::move(out));
}

TriPoly TriPoly::homogeneous_part(std::uint32_t zw_degree) const {
  TriPoly r;
  for (const auto& term : terms_) {
    const Exponents e = unpack(term.key);
    if (e.ez + e.ew == zw_degree) r.terms_.push_back(term);
  }
  return r;
}

std::complex<double> TriPoly::evaluate(std::complex<double> z, std::complex<double> w, double t) const {
  if (terms_.empty()) return 0.0;
  const auto zp = powers(z, degree(Var::z));
  const auto wp = powers(w, degree(Var::zbar));
  const auto tp = powers(t, degree(Var::t));
  std::complex<double> sum = 0.0;
  for (const auto& term : terms_) {
    const Exponents e = unpack(term.key);
    sum += term.coeff.to_complex() * zp[e.ez] * wp[e.ew] * tp[e.et];
  }
  return sum;
}

std::complex<double> TriPoly::evaluate_xy(double x, double y, double t) const {
  return evaluate({x, y}, {x, -y}, t);
}

double TriPoly::magnitude_scale(double x, double y, double t) const {
  const double r = std::hypot(x, y);
  const auto rp = powers(r, std::max(degree(Var::z), degree(Var::zbar)) * 2);
  const auto tp = powers(std::abs(t), degree(Var::t));
  double sum = 0.0;
  for (const auto& term : terms_) {
    const Exponents e = unpack(term.key);
    sum += std::abs(term.coeff.to_complex()) * rp[e.ez + e.ew] * tp[e.et];
  }
  return sum;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string s = term_string(*it);
    if (first) {
      os << s;
      first = false;
    } else if (s.front() == '-') {
      os << " - " << s.substr(1);
    } else {
      os << " + " << s;
    }
  }
  return os.str();
}

std::string TriPoly::leading_term_string() const {
  if (terms_.empty()) return "0";
  return term_string(terms_.back());
}

}  // namespace moutard
