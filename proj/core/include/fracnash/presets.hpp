#pragma once

#include <string>
#include <vector>

#include "fracnash/problem.hpp"

namespace fracnash {

/// The four built-in experiment setups plus a config-driven custom one.
///   ex1: 2D evolution problem on the unit square, classical spatial operator
///        (s = 1), corner control patches, centered observation window,
///        constant targets +1 / -1, time-dependent controls.
///   ex2: stationary variant of ex1 with fractional spatial order, swept
///        over s.
///   ex3: 1D evolution problem on (-2, 2), indicator targets on the left and
///        right quarter intervals, time-constant controls started at one,
///        heavy regularization.
///   ex4: ex3 with targets +1 on the left quarter and -1 on the right.
enum class Preset { kEx1, kEx2, kEx3, kEx4, kCustom };

Preset parse_preset(const std::string& name);
std::string preset_name(Preset preset);

/// How a run's misfit columns are reported, matching each setup's
/// convention.
enum class ErrorConvention {
  kSpacetimeSquaredObserved,  // integral over time of the squared observed misfit
  kSpatialL2,                 // stationary L2(Omega) norm
  kFinalSliceL2,              // L2(Omega) norm of the final-time slice
  kFinalSliceEuclidean,       // unweighted Euclidean norm of the final-time slice
};

ErrorConvention error_convention(Preset preset);

/// Numeric knobs a preset fixes and a config may override.
struct PresetParams {
  int n = 0;             // interior points per axis
  int m = 0;             // time steps
  double horizon = 0.0;  // final time
  double mu1 = 0.0;
  double mu2 = 0.0;
  double gamma = 1.0;
  double s = 1.0;
  bool omega_d_full = false;    // observe everywhere instead of the preset window
  double initial_control = 0.0; // starting value of both controls

  // custom-preset geometry (1D): domain and control boxes, constant targets
  double lower = -2.0, upper = 2.0;
  double omega1_lo = -2.0, omega1_hi = -1.0;
  double omega2_lo = 1.0, omega2_hi = 2.0;
  double target1_value = 1.0, target2_value = -1.0;
  double source_value = 1.0;
  ControlMode custom_control_mode = ControlMode::kTimeConstant;
};

PresetParams default_params(Preset preset);

/// Small instances with the same structure, sized for the dense oracle.
PresetParams shrunk_params(Preset preset);

ProblemSpec make_problem(Preset preset, const PresetParams& params);

/// Starting controls (zeros for ex1/ex2/custom, ones for ex3/ex4, or
/// whatever initial_control says).
ControlPair initial_controls(const ProblemSpec& problem, const PresetParams& params);

/// Default sweep over the source-table's s column values.
std::vector<double> default_s_column(Preset preset);
std::vector<double> default_gamma_list(Preset preset);

/// Map a table-column s entry to the operator order. ex2's column is 2s by
/// definition; ex3's is 2s when column_is_2s (the default reading), else the
/// literal order; ex1/ex4/custom columns are the order itself.
double s_from_column(Preset preset, double column_value, bool column_is_2s);

/// Whether the preset's reported s column is the doubled order.
bool reports_doubled_s(Preset preset, bool column_is_2s);

}  // namespace fracnash
