#pragma once

#include <random>

#include "moutard/tripoly.hpp"

namespace moutard::testing_util {

inline GaussianRational random_coeff(std::mt19937& g, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  return {ratio(num(g), den(g)), ratio(num(g), den(g))};
}

/// Random polynomial in z, w, t with the given per-variable degree caps.
inline TriPoly random_tripoly(std::mt19937& g, unsigned dz, unsigned dw, unsigned dt, int terms = 6) {
  std::uniform_int_distribution<unsigned> ez(0, dz), ew(0, dw), et(0, dt);
  std::vector<std::pair<Exponents, GaussianRational>> t;
  for (int k = 0; k < terms; ++k) t.push_back({{ez(g), ew(g), et(g)}, random_coeff(g)});
  return TriPoly::from_terms(std::move(t));
}

/// Random holomorphic polynomial with zero constant term, degree in [1, max_deg].
inline TriPoly random_holomorphic(std::mt19937& g, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(1, max_deg);
  const unsigned d = deg(g);
  std::vector<std::pair<Exponents, GaussianRational>> t;
  for (unsigned k = 1; k <= d; ++k) t.push_back({{k, 0, 0}, random_coeff(g, 3)});
  TriPoly p = TriPoly::from_terms(std::move(t));
  if (p.degree(Var::z) < d) p += TriPoly::monomial({d, 0, 0});
  return p;
}

}  // namespace moutard::testing_util
