#include "fracnash/presets.hpp"

#include "fracnash/errors.hpp"

namespace fracnash {

Preset parse_preset(const std::string& name) {
  if (name == "ex1") return Preset::kEx1;
  if (name == "ex2") return Preset::kEx2;
  if (name == "ex3") return Preset::kEx3;
  if (name == "ex4") return Preset::kEx4;
  if (name == "custom") return Preset::kCustom;
  throw InvalidArgument("unknown preset '" + name + "' (expected ex1|ex2|ex3|ex4|custom)");
}

std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::kEx1: return "ex1";
    case Preset::kEx2: return "ex2";
    case Preset::kEx3: return "ex3";
    case Preset::kEx4: return "ex4";
    case Preset::kCustom: return "custom";
  }
  return "?";
}

ErrorConvention error_convention(Preset preset) {
  switch (preset) {
    case Preset::kEx1: return ErrorConvention::kSpacetimeSquaredObserved;
    case Preset::kEx2: return ErrorConvention::kSpatialL2;
    case Preset::kEx3: return ErrorConvention::kFinalSliceL2;
    case Preset::kEx4: return ErrorConvention::kFinalSliceEuclidean;
    case Preset::kCustom: return ErrorConvention::kFinalSliceL2;
  }
  return ErrorConvention::kFinalSliceL2;
}

PresetParams default_params(Preset preset) {
  PresetParams p;
  switch (preset) {
    case Preset::kEx1:
      p.n = 33;
      p.m = 64;
      p.horizon = 1.5;
      p.mu1 = p.mu2 = 1e-4;
      p.gamma = 0.99;
      p.s = 1.0;
      p.initial_control = 0.0;
      break;
    case Preset::kEx2:
      p.n = 33;
      p.m = 1;  // no time axis
      p.horizon = 1.0;
      p.mu1 = p.mu2 = 1e-4;
      p.gamma = 1.0;
      p.s = 0.975;
      p.initial_control = 0.0;
      break;
    case Preset::kEx3:
    case Preset::kEx4:
      p.n = 40;
      p.m = 80;
      p.horizon = 0.5;
      p.mu1 = p.mu2 = 10.0;
      p.gamma = 0.60;
      p.s = 0.25;
      p.initial_control = 1.0;
      p.omega_d_full = true;
      break;
    case Preset::kCustom:
      p.n = 40;
      p.m = 80;
      p.horizon = 0.5;
      p.mu1 = p.mu2 = 1.0;
      p.gamma = 0.5;
      p.s = 0.5;
      p.initial_control = 0.0;
      p.omega_d_full = true;
      break;
  }
  return p;
}

PresetParams shrunk_params(Preset preset) {
  PresetParams p = default_params(preset);
  switch (preset) {
    case Preset::kEx1:
      p.n = 8;
      p.m = 4;
      break;
    case Preset::kEx2:
      p.n = 8;
      break;
    case Preset::kEx3:
      p.n = 12;
      p.m = 6;
      break;
    case Preset::kEx4:
      p.n = 10;
      p.m = 4;
      break;
    case Preset::kCustom:
      p.n = 12;
      p.m = 6;
      break;
  }
  return p;
}

namespace {

ProblemSpec square_problem(const PresetParams& params, bool elliptic) {
  ProblemSpec spec;
  spec.space = SpaceGrid::rectangle(0.0, 1.0, params.n, 0.0, 1.0, params.n);
  spec.time = TimeGrid(params.horizon, params.m);
  spec.orders = FractionalOrders(params.gamma, params.s);

  const Eigen::Index ndof = spec.space.dof_count();
  spec.source = SourceTerm::time_constant(Eigen::VectorXd::Ones(ndof));
  spec.initial_state = Eigen::VectorXd::Zero(ndof);
  spec.target1 = Eigen::VectorXd::Ones(ndof);
  spec.target2 = -Eigen::VectorXd::Ones(ndof);
  spec.mu1 = params.mu1;
  spec.mu2 = params.mu2;

  spec.omega1 = Subdomain::from_box(spec.space, {{0.0, 0.0}, {0.25, 0.25}});
  spec.omega2 = Subdomain::from_box(spec.space, {{0.75, 0.0}, {1.0, 0.25}});
  spec.omega_d = params.omega_d_full
                     ? Subdomain::whole(spec.space)
                     : Subdomain::from_box(spec.space, {{0.25, 0.25}, {0.75, 0.75}});

  spec.tracking = elliptic ? TrackingMode::kElliptic : TrackingMode::kParabolic;
  spec.control_mode = elliptic ? ControlMode::kTimeConstant : ControlMode::kTimeDependent;
  return spec;
}

ProblemSpec interval_problem(const PresetParams& params, double target1_on_support,
                             double target2_on_support) {
  ProblemSpec spec;
  spec.space = SpaceGrid::line(-2.0, 2.0, params.n);
  spec.time = TimeGrid(params.horizon, params.m);
  spec.orders = FractionalOrders(params.gamma, params.s);

  const Eigen::Index ndof = spec.space.dof_count();
  spec.source = SourceTerm::time_constant(Eigen::VectorXd::Ones(ndof));
  spec.initial_state = Eigen::VectorXd::Zero(ndof);
  spec.mu1 = params.mu1;
  spec.mu2 = params.mu2;

  spec.omega1 = Subdomain::from_box(spec.space, {{-2.0, 0.0}, {-1.0, 0.0}});
  spec.omega2 = Subdomain::from_box(spec.space, {{1.0, 0.0}, {2.0, 0.0}});
  spec.omega_d = params.omega_d_full
                     ? Subdomain::whole(spec.space)
                     : Subdomain::from_box(spec.space, {{-1.0, 0.0}, {1.0, 0.0}});

  spec.target1 = target1_on_support * spec.omega1.mask().matrix();
  spec.target2 = target2_on_support * spec.omega2.mask().matrix();

  spec.tracking = TrackingMode::kParabolic;
  spec.control_mode = ControlMode::kTimeConstant;
  return spec;
}

ProblemSpec custom_problem(const PresetParams& params) {
  ProblemSpec spec;
  spec.space = SpaceGrid::line(params.lower, params.upper, params.n);
  spec.time = TimeGrid(params.horizon, params.m);
  spec.orders = FractionalOrders(params.gamma, params.s);

  const Eigen::Index ndof = spec.space.dof_count();
  spec.source = SourceTerm::time_constant(
      Eigen::VectorXd::Constant(ndof, params.source_value));
  spec.initial_state = Eigen::VectorXd::Zero(ndof);
  spec.target1 = Eigen::VectorXd::Constant(ndof, params.target1_value);
  spec.target2 = Eigen::VectorXd::Constant(ndof, params.target2_value);
  spec.mu1 = params.mu1;
  spec.mu2 = params.mu2;

  spec.omega1 = Subdomain::from_box(spec.space, {{params.omega1_lo, 0.0}, {params.omega1_hi, 0.0}});
  spec.omega2 = Subdomain::from_box(spec.space, {{params.omega2_lo, 0.0}, {params.omega2_hi, 0.0}});
  spec.omega_d = Subdomain::whole(spec.space);

  spec.tracking = TrackingMode::kParabolic;
  spec.control_mode = params.custom_control_mode;
  return spec;
}

}  // namespace

ProblemSpec make_problem(Preset preset, const PresetParams& params) {
  ProblemSpec spec;
  switch (preset) {
    case Preset::kEx1: spec = square_problem(params, false); break;
    case Preset::kEx2: spec = square_problem(params, true); break;
    case Preset::kEx3: spec = interval_problem(params, 1.0, 1.0); break;
    case Preset::kEx4: spec = interval_problem(params, 1.0, -1.0); break;
    case Preset::kCustom: spec = custom_problem(params); break;
  }
  spec.validate();
  return spec;
}

ControlPair initial_controls(const ProblemSpec& problem, const PresetParams& params) {
  return ControlPair::constant(problem.control_levels(), problem.omega1.size(),
                               problem.omega2.size(), params.initial_control);
}

std::vector<double> default_s_column(Preset preset) {
  switch (preset) {
    case Preset::kEx1: return {1.0};
    case Preset::kEx2: {
      std::vector<double> cols;
      for (int i = 39; i >= 20; --i) cols.push_back(i / 20.0);  // 1.95 down to 1.00
      return cols;
    }
    case Preset::kEx3: return {0.50, 1.00, 1.50};
    case Preset::kEx4: return {0.25, 0.50, 0.75};
    case Preset::kCustom: return {0.5};
  }
  return {};
}

std::vector<double> default_gamma_list(Preset preset) {
  switch (preset) {
    case Preset::kEx1: return {0.99};
    case Preset::kEx2: return {1.0};
    case Preset::kEx3:
    case Preset::kEx4: return {0.60, 0.70, 0.80, 0.90};
    case Preset::kCustom: return {0.5};
  }
  return {};
}

double s_from_column(Preset preset, double column_value, bool column_is_2s) {
  double s = column_value;
  if (preset == Preset::kEx2 || (preset == Preset::kEx3 && column_is_2s)) s = column_value / 2.0;
  if (!(s > 0.0) || s > 1.0)
    throw InvalidArgument("s column value " + std::to_string(column_value) +
                          " maps to an order outside (0, 1] under this convention");
  return s;
}

bool reports_doubled_s(Preset preset, bool column_is_2s) {
  return preset == Preset::kEx2 || (preset == Preset::kEx3 && column_is_2s);
}

}  // namespace fracnash
