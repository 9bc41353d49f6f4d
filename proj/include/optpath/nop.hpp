#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "optpath/hamiltonian.hpp"

namespace optpath {

// One solved two-point boundary problem.
struct ShootingResult {
  double alpha0 = 0;
  PhaseTrajectory trajectory;
  double terminal_error = 0;  // |x(T) - xT|
  double action = 0;          // S(xT, T | x0) estimate along the trajectory
};

// α₀ sweep: terminal values, first xT-crossing times, and every root of
// x(T; α₀) = xT found by bisection between sign changes.
struct NopScan {
  std::vector<double> alpha0_grid;
  std::vector<std::optional<double>> hit_times;  // first crossing, interpolated
  std::vector<double> terminal_values;           // x(T; α₀); NaN when escaped
  std::vector<ShootingResult> roots;
};

struct ShootingOptions {
  int steps = 0;              // 0 -> max(1000, 200*T)
  double domain_pad = 5.0;    // escape guard beyond the endpoint range
  double alpha_tol = 1e-8;    // bisection width on α₀
  double terminal_tol = 1e-6;
};

int default_shot_steps(double T, const ShootingOptions& opts);

// Bisection on α₀ over a sign-changing bracket. Throws NoBracket when the
// endpoints do not straddle, NumericFailure when bisection stalls on an
// escape cliff instead of a root.
ShootingResult solve_nop(const HamiltonianModel& model, double x0, double xT, double T,
                         std::pair<double, double> bracket, const ShootingOptions& opts = {});

NopScan scan_alpha0(const HamiltonianModel& model, double x0, double xT, double T,
                    const std::vector<double>& grid, const ShootingOptions& opts = {});

// Indices of scan roots whose action is within action_tol of the minimum.
// Non-minimal critical points of the boundary problem are not optimal paths.
std::vector<std::size_t> minimal_action_roots(const NopScan& scan, double action_tol = 5e-3);

// scan + minimal-action selection in one call.
std::vector<ShootingResult> find_nops(const HamiltonianModel& model, double x0, double xT,
                                      double T, double alpha_lo, double alpha_hi,
                                      int grid_points = 2001, const ShootingOptions& opts = {},
                                      double action_tol = 5e-3);

// Closed-form affine NOP, linear for a1 = 0 and the sinh interpolation else.
double nop_closed_affine(double a0, double a1, double x0, double xT, double T, double t);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace optpath
