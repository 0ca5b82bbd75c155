#pragma once

#include <array>
#include <functional>

namespace moutard::detail {

struct MinPoint {
  double x;
  double y;
  double value;
};

// Compass search from (x0, y0) with initial step h, halving until h < tol.
inline MinPoint compass_minimize(const std::function<double(double, double)>& f, double x0, double y0,
                                 double h, double tol = 1e-12) {
  MinPoint best{x0, y0, f(x0, y0)};
  constexpr std::array<std::array<double, 2>, 8> kDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                                        {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  int guard = 0;
  while (h > tol && guard++ < 100000) {
    bool improved = false;
    for (const auto& d : kDirs) {
      const double x = best.x + h * d[0];
      const double y = best.y + h * d[1];
      const double v = f(x, y);
      if (v < best.value) {
        best = {x, y, v};
        improved = true;
        break;
      }
    }
    if (!improved) h *= 0.5;
  }
  return best;
}

}  // namespace moutard::detail
