#include "novikov/core/field.hpp"

#include <cmath>
#include <stdexcept>

namespace novikov {

Field::Field(GridPtr g, double time)
    : grid(std::move(g)), t(time), values(static_cast<std::size_t>(grid->size()), 0.0) {}

Field::Field(GridPtr g, double time, std::vector<double> v)
    : grid(std::move(g)), t(time), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid->size())
    throw std::invalid_argument("Field: value count does not match grid");
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double Field::boundary_abs() const {
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

Field sample_field(const GridPtr& grid, double t, const std::function<double(double)>& f) {
  Field out(grid, t);
  for (int i = 0; i < grid->size(); ++i) out[i] = f(grid->node(i));
  return out;
}

void FieldHistory::push(Field f) {
  if (!f.grid->same_as(*grid_))
    throw std::invalid_argument("FieldHistory: snapshot grid mismatch");
  if (snapshots_.empty()) {
    if (f.t != 0.0) throw std::invalid_argument("FieldHistory: first snapshot must be at t=0");
  } else if (!(f.t > snapshots_.back().t)) {
    throw std::invalid_argument("FieldHistory: times must increase strictly");
  }
  snapshots_.push_back(std::move(f));
}

double FieldHistory::uniform_dt() const {
  if (snapshots_.size() < 2)
    throw std::invalid_argument("FieldHistory: need at least two snapshots");
  const double dt = snapshots_[1].t - snapshots_[0].t;
  for (std::size_t k = 1; k + 1 < snapshots_.size(); ++k) {
    const double step = snapshots_[k + 1].t - snapshots_[k].t;
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw std::invalid_argument("FieldHistory: snapshot spacing is not uniform");
  }
  return dt;
}

} // namespace novikov
