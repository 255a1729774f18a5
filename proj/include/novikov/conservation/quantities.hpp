#pragma once

#include <string>
#include <vector>

#include "novikov/conservation/currents.hpp"
#include "novikov/core/field.hpp"

namespace novikov::cons {

struct QuantityFlags {
  bool poor_decay = false;  // weighted integrand does not vanish at the ends
  bool clipped = false;     // nodes dropped where the exponential weight tops 1e12
};

/// Integral of the current's density over the grid (trapezoid). The first
/// current integrates the reduced density u (dropping the exact-derivative
/// u_xx term); the weighted ones clip nodes where the weight exceeds 1e12.
double quantity(const CurrentPair& cp, const Field& field, QuantityFlags* flags = nullptr);

struct QuantityReport {
  CurrentId id;
  std::string weight_label;
  std::vector<double> times;
  std::vector<double> values;
  double relative_drift = 0.0;
  QuantityFlags flags;

  std::string to_csv() const;      // time,value rows
  std::string to_json_summary() const;
};

/// Quantity at every snapshot plus the relative drift
/// max|value - value(0)| / max(|value(0)|, floor).
QuantityReport drift_monitor(const CurrentPair& cp, const FieldHistory& h,
                             double floor = 1e-12);

} // namespace novikov::cons
