#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "moutard/serialize.hpp"

namespace moutard {

/// A field sampled on an nx × ny lattice. values[j·nx + i] is the value at
/// (x_i, y_j); x varies fastest.
struct GridReport {
  std::string field;
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  int nx = 0, ny = 0;
  double t = 0.0;
  std::vector<double> values;
  Json metadata = Json::object();

  double x_at(int i) const { return nx > 1 ? x_min + (x_max - x_min) * i / (nx - 1) : x_min; }
  double y_at(int j) const { return ny > 1 ? y_min + (y_max - y_min) * j / (ny - 1) : y_min; }
};

/// Fills skeleton.values from f(x, y). A PoleError (or a non-finite value)
/// becomes NaN when allow_poles is set and propagates otherwise. Throws
/// std::invalid_argument on an empty window or nonpositive resolution.
GridReport export_grid(const std::function<double(double, double)>& f, GridReport skeleton, bool allow_poles);

/// CSV with header "x,y,value" (or "x,y,t,value"), shortest round-trip floats.
void write_csv(const GridReport& g, std::ostream& out, bool with_t = false);

/// Shortest decimal form that parses back to the same double.
std::string shortest(double v);

/// Summary JSON (no values): field, window, resolution, t, counts, extrema.
Json grid_summary(const GridReport& g);

}  // namespace moutard
