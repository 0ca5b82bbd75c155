#include "moutard/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

#include "moutard/errors.hpp"

namespace moutard {

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.empty()) throw ParseError("empty rational literal");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad decimal '" + s + "'");
    if (digits.front() == '+') digits.erase(digits.begin());
    mpz_class den = 1;
    for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw ParseError("bad decimal '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  static thread_local Rational tmp;
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  re_ += tmp;
  if (!a_real && !b_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ -= tmp;
  }
  if (!b_real) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ += tmp;
  }
  if (!a_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ += tmp;
  }
}

std::string GaussianRational::to_string() const {
  auto fmt = [](const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  };
  if (sgn(im_) == 0) return fmt(re_);
  std::string imag = (im_ == 1) ? "" : (im_ == -1) ? "-" : fmt(im_);
  if (sgn(re_) == 0) return imag + "i";
  std::string sep = sgn(im_) > 0 ? "+" : "";
  return fmt(re_) + sep + imag + "i";
}

}  // namespace moutard
