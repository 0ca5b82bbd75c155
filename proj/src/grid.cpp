#include "moutard/grid.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "moutard/errors.hpp"
#include "moutard/parallel.hpp"

namespace moutard {

GridReport export_grid(const std::function<double(double, double)>& f, GridReport g, bool allow_poles) {
  if (g.nx < 1 || g.ny < 1) throw std::invalid_argument("export_grid: resolution must be positive");
  if (!(g.x_max > g.x_min) || !(g.y_max > g.y_min)) throw std::invalid_argument("export_grid: empty window");
  g.values.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
  parallel_for(static_cast<std::size_t>(g.ny), [&](std::size_t j) {
    const double y = g.y_at(static_cast<int>(j));
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x_at(i);
      double v;
      try {
        v = f(x, y);
      } catch (const PoleError&) {
        if (!allow_poles) throw;
        v = std::numeric_limits<double>::quiet_NaN();
      }
      if (!std::isfinite(v) && !allow_poles) {
        throw PoleError("export_grid: non-finite value of " + g.field + " at (" + shortest(x) + ", " + shortest(y) + ")");
      }
      g.values[j * g.nx + i] = std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
    }
  });
  return g;
}

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(const GridReport& g, std::ostream& out, bool with_t) {
  out << (with_t ? "x,y,t,value\n" : "x,y,value\n");
  const std::string t = shortest(g.t);
  for (int j = 0; j < g.ny; ++j) {
    const std::string y = shortest(g.y_at(j));
    for (int i = 0; i < g.nx; ++i) {
      out << shortest(g.x_at(i)) << ',' << y << ',';
      if (with_t) out << t << ',';
      out << shortest(g.values[static_cast<std::size_t>(j) * g.nx + i]) << '\n';
    }
  }
}

Json grid_summary(const GridReport& g) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  long nan = 0;
  for (double v : g.values) {
    if (std::isnan(v)) {
      ++nan;
      continue;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Json j;
  j["field"] = g.field;
  j["window"] = {g.x_min, g.x_max, g.y_min, g.y_max};
  j["resolution"] = {g.nx, g.ny};
  j["t"] = g.t;
  j["count"] = g.values.size();
  j["nan_count"] = nan;
  j["min"] = lo;
  j["max"] = hi;
  j["metadata"] = g.metadata;
  return j;
}

}  // namespace moutard
