#include "novikov/conservation/quantities.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "novikov/core/fd.hpp"
#include "novikov/io/csv.hpp"

namespace novikov::cons {

namespace {
constexpr double kWeightCap = 1e12;
constexpr double kDecayRel = 1e-6;
} // namespace

double quantity(const CurrentPair& cp, const Field& field, QuantityFlags* flags) {
  const int n = field.size();
  const double dx = field.grid->dx();
  QuantityFlags local;

  std::vector<double> integrand(static_cast<std::size_t>(n), 0.0);
  switch (cp.id()) {
    case CurrentId::Current1: {
      // reduced density: u and u - u_xx differ by an exact x-derivative
      for (int i = 0; i < n; ++i) integrand[static_cast<std::size_t>(i)] = field[i];
      break;
    }
    case CurrentId::Current2: {
      const Field ux = diff_x(field, 1);
      const Field uxx = diff_x(field, 2);
      for (int i = 0; i < n; ++i) {
        const double w = std::exp(-2.0 * field.grid->node(i));
        if (w > kWeightCap) {
          local.clipped = true;
          continue;
        }
        integrand[static_cast<std::size_t>(i)] = w * (field[i] + 2.0 * ux[i] + uxx[i]);
      }
      break;
    }
    case CurrentId::Current3: {
      const Field uxx = diff_x(field, 2);
      const double ft = cp.weight().f(field.t);
      for (int i = 0; i < n; ++i) {
        const double w = std::exp(field.grid->node(i));
        if (w > kWeightCap) {
          local.clipped = true;
          continue;
        }
        integrand[static_cast<std::size_t>(i)] = ft * w * (field[i] - uxx[i]);
      }
      break;
    }
  }

  double sum = 0.5 * (integrand.front() + integrand.back());
  for (int i = 1; i + 1 < n; ++i) sum += integrand[static_cast<std::size_t>(i)];
  sum *= dx;

  double interior_scale = 0.0;
  for (double v : integrand) interior_scale = std::max(interior_scale, std::abs(v));
  const double edge = std::max(std::abs(integrand.front()), std::abs(integrand.back()));
  if (edge > kDecayRel * std::max(1.0, interior_scale)) local.poor_decay = true;

  if (flags != nullptr) *flags = local;
  return sum;
}

QuantityReport drift_monitor(const CurrentPair& cp, const FieldHistory& h, double floor) {
  QuantityReport rep;
  rep.id = cp.id();
  rep.weight_label = cp.weight().label;
  for (int k = 0; k < h.snapshot_count(); ++k) {
    QuantityFlags flags;
    const double v = quantity(cp, h.snapshot(k), &flags);
    rep.times.push_back(h.time(k));
    rep.values.push_back(v);
    rep.flags.poor_decay = rep.flags.poor_decay || flags.poor_decay;
    rep.flags.clipped = rep.flags.clipped || flags.clipped;
  }
  if (!rep.values.empty()) {
    const double v0 = rep.values.front();
    double dev = 0.0;
    for (double v : rep.values) dev = std::max(dev, std::abs(v - v0));
    rep.relative_drift = dev / std::max(std::abs(v0), floor);
  }
  return rep;
}

std::string QuantityReport::to_csv() const {
  std::string out = "time,value\n";
  for (std::size_t k = 0; k < times.size(); ++k)
    out += io::fmt(times[k]) + "," + io::fmt(values[k]) + "\n";
  return out;
}

std::string QuantityReport::to_json_summary() const {
  nlohmann::json j;
  j["id"] = current_name(id);
  j["weight"] = weight_label;
  j["relative_drift"] = relative_drift;
  j["initial_value"] = values.empty() ? 0.0 : values.front();
  j["final_value"] = values.empty() ? 0.0 : values.back();
  j["poor_decay"] = flags.poor_decay;
  j["clipped"] = flags.clipped;
  return j.dump(2);
}

} // namespace novikov::cons
