#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "novikov/core/field.hpp"

namespace novikov::evo {

enum class Formulation {
  NonlocalU,  // u_t = 2 u u_x - u^2 + G * u^2
  MTransport  // m_t = 2 u m_x + 6 u_x m - 2 u m + 2 (u - u_x)^2, u = g * m
};

struct SolverConfig {
  GridPtr grid;
  double dt = 1e-3;
  double t_end = 1.0;
  Formulation formulation = Formulation::NonlocalU;
  double blowup_threshold = 1e6;
  int snapshot_stride = 1;
};

struct CauchyProblem {
  std::function<double(double)> u0;
  /// Optional closed-form momentum u0 - u0''; when absent the transport
  /// formulation derives it by differences.
  std::optional<std::function<double(double)>> m0;
};

/// Right-hand side of the nonlocal form: 2 u u_x - u^2 + G * u^2.
Field rhs_nonlocal(const Field& u);

/// Right-hand side of the momentum transport form for m, with u = g * m.
Field rhs_m_transport(const Field& m);

enum class RunStatus { Completed, BlowUp, CflViolation };

struct RunResult {
  FieldHistory history;  // snapshots of u in both formulations
  RunStatus status = RunStatus::Completed;
  double halt_time = 0.0;
  std::vector<std::string> warnings;
};

/// Classic four-stage Runge-Kutta in time. Snapshots are recorded every
/// `snapshot_stride` steps (the stride must divide the step count). A blow-up
/// (max|u| above threshold, or non-finite values) or a CFL violation of
/// dt <= 0.5 dx / max(1, 2 max|u|), re-checked each step, halts the run with
/// the corresponding status and a truncated history.
RunResult run(const CauchyProblem& p, const SolverConfig& cfg);

} // namespace novikov::evo
