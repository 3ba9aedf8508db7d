#pragma once

#include <cstddef>
#include <vector>

#include "sktlab/types.hpp"

namespace sktlab {

/// Uniform cell-centred grid on [0, Lx] (x [0, Ly]).
struct Grid {
  int dim = 1;
  int nx = 1;
  int ny = 1;
  double lx = 1.0;
  double ly = 1.0;

  static Grid line(int cells, double length);
  static Grid rect(int cells_x, int cells_y, double length_x, double length_y);

  void validate() const;
  std::size_t cells() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(dim == 2 ? ny : 1); }
  double hx() const { return lx / nx; }
  double hy() const { return dim == 2 ? ly / ny : 1.0; }
  double cell_volume() const { return dim == 2 ? hx() * hy() : hx(); }
  double domain_volume() const { return dim == 2 ? lx * ly : lx; }
  double x_center(int ix) const { return (ix + 0.5) * hx(); }
  double y_center(int iy) const { return (iy + 0.5) * hy(); }
};

/// Per-species cell arrays (row-major, x fastest) at time t.
struct StateField {
  double t = 0.0;
  std::vector<std::vector<double>> u;

  StateField() = default;
  StateField(int species, std::size_t cells, double value = 0.0)
      : u(static_cast<std::size_t>(species), std::vector<double>(cells, value)) {}

  int species() const { return static_cast<int>(u.size()); }
  std::size_t cells() const { return u.empty() ? 0 : u.front().size(); }
  Vec at(std::size_t cell) const;
  void set(std::size_t cell, const Vec& v);
  bool nonnegative_finite() const;
  double max_value() const;
};

}  // namespace sktlab
