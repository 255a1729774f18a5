#pragma once

#include <functional>
#include <span>
#include <vector>

#include "novikov/core/grid.hpp"

namespace novikov {

/// One spatial profile at a fixed time.
struct Field {
  GridPtr grid;
  double t = 0.0;
  std::vector<double> values;

  Field() = default;
  Field(GridPtr g, double time);
  Field(GridPtr g, double time, std::vector<double> v);

  int size() const { return grid->size(); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }

  double max_abs() const;
  /// Largest |value| at the two boundary nodes.
  double boundary_abs() const;
};

Field sample_field(const GridPtr& grid, double t, const std::function<double(double)>& f);

/// Time-indexed snapshots on a shared grid; times strictly increasing, times[0] == 0.
class FieldHistory {
 public:
  explicit FieldHistory(GridPtr grid) : grid_(std::move(grid)) {}

  void push(Field f);

  const GridPtr& grid() const { return grid_; }
  int snapshot_count() const { return static_cast<int>(snapshots_.size()); }
  const Field& snapshot(int k) const { return snapshots_[static_cast<std::size_t>(k)]; }
  double time(int k) const { return snapshots_[static_cast<std::size_t>(k)].t; }
  const std::vector<Field>& snapshots() const { return snapshots_; }

  /// Uniform snapshot spacing; throws if fewer than two snapshots or non-uniform.
  double uniform_dt() const;

 private:
  GridPtr grid_;
  std::vector<Field> snapshots_;
};

} // namespace novikov
