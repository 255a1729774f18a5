#pragma once

#include <memory>
#include <span>
#include <vector>

namespace novikov {

/// Uniform grid on [-L, L] with N nodes, x_i = -L + i*dx, dx = 2L/(N-1).
class SpaceGrid {
 public:
  SpaceGrid(double half_length, int point_count);

  double half_length() const { return half_length_; }
  int size() const { return n_; }
  double dx() const { return dx_; }
  double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::span<const double> nodes() const { return nodes_; }

  /// Index of the node nearest to x (clamped to the grid).
  int nearest_index(double x) const;

  bool same_as(const SpaceGrid& other) const {
    return n_ == other.n_ && half_length_ == other.half_length_;
  }

 private:
  double half_length_;
  int n_;
  double dx_;
  std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const SpaceGrid>;

GridPtr make_grid(double half_length, int point_count);

} // namespace novikov
