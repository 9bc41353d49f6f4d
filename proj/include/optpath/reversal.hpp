#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "optpath/nppd.hpp"
#include "optpath/oracle.hpp"

namespace optpath {

enum class BridgeDirection {
  Backward,  // x̄: starts at xT on the shifted lattice Δ + mε, ends at x0
  Forward,   // x̃: starts at x0 on the lattice nε, ends at xT
};

// A conditioned chain over the discretized state space. Forward kernels are
// the Doob transform by the hitting vectors h[n][i] = P(end in bin(xT) | i, n);
// backward kernels are the Bayes reversal of the forward density family.
class BridgeChain {
 public:
  static BridgeChain forward(const ModelSpec& spec, const Grid& grid);
  static BridgeChain backward(const ModelSpec& spec, const Grid& grid);

  BridgeDirection direction() const { return direction_; }
  const Grid& grid() const { return grid_; }
  int steps() const { return steps_; }
  double epsilon() const { return epsilon_; }
  double lattice_remainder() const { return delta_; }
  double pin_start() const { return pin_start_; }
  double pin_end() const { return pin_end_; }
  const TransitionMatrix& base() const { return *P_; }

  // transition row of the conditioned chain out of state i at chain step m
  // (normalized over its support).
  std::vector<double> kernel_row(int m, int i) const;

  // hitting vector at lattice step n, max-normalized (Forward only).
  const std::vector<double>& hitting(int n) const;

  PathSample sample(std::mt19937_64& rng) const;

 private:
  BridgeDirection direction_;
  Grid grid_;
  double epsilon_ = 0, delta_ = 0;
  int steps_ = 0;
  double pin_start_ = 0, pin_end_ = 0;
  int start_bin_ = 0;
  std::shared_ptr<const TransitionMatrix> P_;
  std::shared_ptr<const DensitySequence> forward_seq_;         // Backward kernels
  std::shared_ptr<const std::vector<std::vector<double>>> hit_;  // Forward kernels
};

// Doob-transformed kernel at step n, materialized from raw hitting vectors:
// L[i][j] = h_next[j] P[i][j] / h_cur[i], 0/0 = 0.
std::vector<std::vector<double>> tilde_kernel(const TransitionMatrix& P,
                                              const std::vector<double>& h_cur,
                                              const std::vector<double>& h_next);

// Limiting drift fields b̄ and b̃ of the conditioned chains.
class LimitDriftField {
 public:
  // ε→0 limit of the affine closed forms (Brownian/OU bridge drift).
  static LimitDriftField affine(double a0, double a1, double pin, double T,
                                BridgeDirection direction);
  // ∇_α H(x, α_loc) with α_loc the initial momentum of a fresh local solve
  // from (x, t) to (xT, T). Evaluations are cached on a lattice and
  // bilinearly interpolated between cached nodes; the lazy cache makes a
  // field instance single-threaded (clone per thread).
  static LimitDriftField nop_local(const HamiltonianModel& model, double xT, double T,
                                   double alpha_lo, double alpha_hi, int cache_nx = 0,
                                   int cache_nt = 0, double x_lo = 0, double x_hi = 0);

  double operator()(double x, double t) const;

 private:
  LimitDriftField() = default;
  bool affine_ = true;
  double a0_ = 0, a1_ = 0, pin_ = 0, T_ = 0;
  // NopLocal state
  std::shared_ptr<const HamiltonianModel> model_;
  double xT_ = 0, alpha_lo_ = 0, alpha_hi_ = 0;
  int cache_nx_ = 0, cache_nt_ = 0;
  double x_lo_ = 0, x_hi_ = 0;
  mutable std::map<std::pair<int, int>, double> cache_;
  double solve_local(double x, double t) const;
  double cached_node(int ix, int it) const;
};

struct LlnStat {
  double epsilon = 0;
  double median = 0;
  double p90 = 0;
  int samples = 0;
};

// Prop 4.2-style experiment: per ε, distribution of
// sup_{t <= 0.9 T} |x̃(t) − φ_NOP(t)| over sampled forward-bridge paths.
std::vector<LlnStat> lln_experiment(const JumpMeasure& measure, double x0, double xT, double T,
                                    const std::vector<double>& epsilons, int samples,
                                    const PhaseTrajectory& nop, std::uint64_t seed);

}  // namespace optpath
