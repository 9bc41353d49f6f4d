#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optpath/model.hpp"
#include "optpath/nop.hpp"

namespace optpath {

// Uniform partition of D = [xl, xr) into n_bins half-open cells plus one
// absorbing state for R \ D. Cell i (0-based) covers [xl + i*h, xl + (i+1)*h)
// and is represented by its midpoint.
struct Grid {
  double xl = 0, xr = 0;
  int n_bins = 0;
  double width = 0;  // h

  static Grid build(double xl, double xr, int n_bins);

  double midpoint(int i) const { return xl + width * (i + 0.5); }
  double edge(int i) const { return xl + width * i; }
  int absorbing_index() const { return n_bins; }
  int n_states() const { return n_bins + 1; }
  bool contains(double x) const { return x >= xl && x < xr; }
  int bin_index(double x) const;  // throws when x outside [xl, xr)
};

// Row-stochastic matrix of the discretized chain; last state absorbing.
// Interior rows have compact support (the jump kernel decays fast), which the
// recursions exploit.
struct TransitionMatrix {
  int n = 0;  // states
  std::vector<double> a;
  std::vector<int> row_first, row_last;  // support [first, last) over interior columns

  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double row_sum(int i) const;
};

TransitionMatrix build_transition_matrix(const ModelSpec& spec, const Grid& grid);

// p[n][i] for n = 0..steps; renormalized each step with the removed factor
// accumulated in log_norm (the reversed kernels only ever use ratios).
struct DensitySequence {
  int steps = 0;
  int n_states = 0;
  std::vector<std::vector<double>> p;
  std::vector<double> log_norm;
};

DensitySequence forward_recursion(const TransitionMatrix& P, const Grid& grid, double x0,
                                  int steps);

// Same recursion from an arbitrary initial mass vector (length n_states).
DensitySequence forward_recursion_from(const TransitionMatrix& P, std::vector<double> initial,
                                       int steps);

// Reversed kernel at step n, materialized (tests and small instances):
// Pbar[i][j] = p[n][j] P[j][i] / p[n+1][i], with 0/0 = 0.
std::vector<std::vector<double>> reversed_kernel(const TransitionMatrix& P,
                                                 const DensitySequence& seq, int n);

// Backward recursion of the pinned chain, streaming the reversed kernels from P and
// p[n] instead of materializing them. Throws ZeroConditioningMass when the
// chain cannot reach bin(xT).
std::vector<std::vector<double>> backward_recursion(const TransitionMatrix& P,
                                                    const DensitySequence& seq, const Grid& grid,
                                                    double xT);

struct SlicePeak {
  double x = 0;      // quadratically refined abscissa
  double value = 0;  // density at the winning cell
};

// q[n][i] over interior cells (density units: cell mass / h) plus per-slice
// local maxima above half the slice maximum (to expose bimodality).
struct NppdField {
  Grid grid;
  double epsilon = 0;
  int steps = 0;
  std::vector<std::vector<double>> q;
  std::vector<std::vector<SlicePeak>> peaks;

  double time_of(int n) const { return n * epsilon; }
};

NppdField assemble_nppd(const std::vector<std::vector<double>>& conditioned, const Grid& grid,
                        double epsilon);

// Strict local maxima of one density slice, quadratically refined, keeping
// those above rel_floor times the slice maximum. The field's own peak lists
// use rel_floor = 0.5; a tiny floor instead exposes modes whose weight is
// suppressed by the fluctuation prefactor.
std::vector<SlicePeak> slice_local_maxima(const std::vector<double>& q, const Grid& grid,
                                          double rel_floor);

// (t, x) of the dominant peak per slice.
std::vector<std::pair<double, double>> peak_trajectory(const NppdField& field);

// Advisory domain check: boundary actions should
// dominate S(xT, T | x0) with some margin.
struct DomainReport {
  bool ok = false;
  double target_action = 0;
  double boundary_action = 0;  // min over probed (boundary, t)
  double margin = 0;           // (boundary - target) / max(target, 1e-12)
  std::vector<std::string> notes;
};

DomainReport domain_adequacy_check(const ModelSpec& spec, const Grid& grid,
                                   const ShootingResult& nop);

// Whole discretized-bridge pipeline. The grid is refined upward when h > εσ/2 unless
// enforcement is disabled; too-coarse cells alias the jump kernel.
struct NppdOptions {
  bool enforce_resolution = true;
};

struct NppdRun {
  Grid grid;
  bool grid_refined = false;
  int requested_bins = 0;
  TransitionMatrix P;
  DensitySequence forward;
  std::vector<std::vector<double>> conditioned;
  NppdField field;
  double escape_mass = 0;  // absorbing mass of p[N]
};

int minimum_bins(double xl, double xr, double epsilon, double sigma);

NppdRun compute_nppd(const ModelSpec& spec, const Grid& requested,
                     const NppdOptions& options = {});

// Default CLI policy: pad 30% beyond the data range and apply the resolution
// floor.
Grid default_grid(const ModelSpec& spec, const PhaseTrajectory* nop_trajectory,
                  int requested_bins = 400, double pad_fraction = 0.3);

}  // namespace optpath
