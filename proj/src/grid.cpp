#include "sktlab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "sktlab/errors.hpp"

namespace sktlab {

Grid Grid::line(int cells, double length) {
  Grid g;
  g.dim = 1;
  g.nx = cells;
  g.lx = length;
  g.validate();
  return g;
}

Grid Grid::rect(int cells_x, int cells_y, double length_x, double length_y) {
  Grid g;
  g.dim = 2;
  g.nx = cells_x;
  g.ny = cells_y;
  g.lx = length_x;
  g.ly = length_y;
  g.validate();
  return g;
}

void Grid::validate() const {
  if (dim != 1 && dim != 2) throw DomainError("grid dim must be 1 or 2");
  if (nx < 1 || (dim == 2 && ny < 1)) throw DomainError("grid needs at least one cell per axis");
  if (!(lx > 0.0) || (dim == 2 && !(ly > 0.0))) throw DomainError("grid lengths must be positive");
}

Vec StateField::at(std::size_t cell) const {
  Vec v(species());
  for (int i = 0; i < species(); ++i) v[i] = u[static_cast<std::size_t>(i)][cell];
  return v;
}

void StateField::set(std::size_t cell, const Vec& v) {
  for (int i = 0; i < species(); ++i) u[static_cast<std::size_t>(i)][cell] = v[i];
}

bool StateField::nonnegative_finite() const {
  for (const auto& s : u)
    for (double x : s)
      if (!(x >= 0.0) || !std::isfinite(x)) return false;
  return true;
}

double StateField::max_value() const {
  double m = 0.0;
  for (const auto& s : u)
    for (double x : s) m = std::max(m, x);
  return m;
}

}  // namespace sktlab
