#include "novikov/core/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace novikov {

SpaceGrid::SpaceGrid(double half_length, int point_count)
    : half_length_(half_length), n_(point_count) {
  if (!(half_length > 0.0)) throw std::invalid_argument("SpaceGrid: half_length must be > 0");
  if (n_ < 16) throw std::invalid_argument("SpaceGrid: need at least 16 points");
  dx_ = 2.0 * half_length_ / static_cast<double>(n_ - 1);
  nodes_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    nodes_[static_cast<std::size_t>(i)] = -half_length_ + dx_ * static_cast<double>(i);
  nodes_.back() = half_length_;
}

int SpaceGrid::nearest_index(double x) const {
  double f = (x + half_length_) / dx_;
  int i = static_cast<int>(std::lround(f));
  if (i < 0) i = 0;
  if (i >= n_) i = n_ - 1;
  return i;
}

GridPtr make_grid(double half_length, int point_count) {
  return std::make_shared<const SpaceGrid>(half_length, point_count);
}

} // namespace novikov
