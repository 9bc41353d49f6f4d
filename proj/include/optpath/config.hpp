#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optpath/model.hpp"

namespace optpath {

enum class Experiment {
  SimulateForward,
  SolveNop,
  ScanAlpha0,
  ComputeNppd,
  SampleBridges,
  LlnSweep,
  VerifyOracles,
};

std::string experiment_name(Experiment e);

// Validated run description. Built from a flat key-value config file with
// dotted sections; unknown keys are errors.
struct RunConfig {
  Experiment experiment = Experiment::ComputeNppd;

  std::string drift = "zero";
  double drift_a0 = 0.0;
  double drift_a1 = 0.0;
  double kappa = 2.0;
  double sigma = 1.0;
  double epsilon = 0.1;
  double horizon = 1.0;
  double x0 = 0.0;
  double xT = 0.0;

  std::optional<double> grid_xl, grid_xr;
  std::optional<int> grid_nx;
  bool allow_coarse_grid = false;

  double scan_alpha_min = -1.0;
  double scan_alpha_max = 1.0;
  int scan_points = 2001;
  std::optional<double> bracket_lo, bracket_hi;

  std::vector<double> lln_epsilons = {0.1, 0.025, 0.00625};
  int lln_samples = 200;

  int bridge_samples = 16;
  std::string bridge_direction = "forward";

  int simulate_paths = 1;

  std::uint64_t seed = 0;
  std::string output_dir = "out";

  DriftFunction make_drift() const;
  JumpMeasure make_measure() const;
  ModelSpec make_model() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace optpath
