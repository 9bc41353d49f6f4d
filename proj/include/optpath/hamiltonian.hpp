#pragma once

#include <array>
#include <vector>

#include "optpath/model.hpp"

namespace optpath {

enum class HamiltonianMode { ClosedKappa2, Series };

// c2, c4, c6 of the even power-series expansion of the centered log moment
// generating function, exactly as the closed-form Γ expressions give them.
std::array<double, 3> series_coefficients(double kappa, double sigma);

// H(x,α) = ln ∫ e^{αz} μ_x(dz) = b(x)·α + H*(α). For κ = 2 the centered part
// is exactly σ²α²/4; otherwise it is replaced by the 2k-th order series
// c2 α² + c4 α⁴ + c6 α⁶ (k capped at 3).
class HamiltonianModel {
 public:
  static HamiltonianModel closed_kappa2(JumpMeasure measure);
  static HamiltonianModel series(JumpMeasure measure, int order_k = 3);
  // closed form when κ = 2, otherwise series of the given order.
  static HamiltonianModel for_measure(JumpMeasure measure, int order_k = 3);

  double value(double x, double alpha) const;   // H
  double dalpha(double x, double alpha) const;  // ∂H/∂α
  double dalpha2(double x, double alpha) const; // ∂²H/∂α²
  double dx(double x, double alpha) const;      // ∂H/∂x = b'(x)·α

  // Legendre transform L(x,β) = sup_α [αβ − H(x,α)], by Newton on the strictly
  // convex dual. Throws NumericFailure on non-convergence.
  double lagrangian(double x, double beta) const;

  HamiltonianMode mode() const { return mode_; }
  const std::array<double, 3>& coeffs() const { return c_; }
  const JumpMeasure& measure() const { return measure_; }

 private:
  HamiltonianModel(JumpMeasure m, HamiltonianMode mode, std::array<double, 3> c, int k);
  JumpMeasure measure_;
  HamiltonianMode mode_;
  std::array<double, 3> c_{};  // c2, c4, c6 (zero beyond the order)
  int order_k_ = 3;
};

struct PhasePoint {
  double x;
  double alpha;
};

// Discretized solution of Hamilton's system with the running action
// S(x(t), t | x0) accumulated from the integrand α·xdot − H.
struct PhaseTrajectory {
  std::vector<double> times;        // uniform step
  std::vector<PhasePoint> points;
  std::vector<double> action;       // running action at each node

  double total_action() const { return action.empty() ? 0.0 : action.back(); }
  double x_at(double t) const;      // linear interpolation
  double alpha_at(double t) const;
};

struct HamiltonFlowResult {
  PhaseTrajectory trajectory;
  bool escaped = false;    // |x| crossed the bound before T
  double escape_time = 0;
};

// Fixed-step RK4 on (x, α, S). Stops early when |x| crosses x_bound or |α|
// crosses alpha_bound (the latter is an overflow guard; shooting only
// restricts the state).
HamiltonFlowResult integrate_hamilton_guarded(const HamiltonianModel& model, double x0,
                                              double alpha0, double T, int steps,
                                              double x_bound, double alpha_bound = 1e6);

// Same, but an escape is an error (Divergence). steps >= 10.
PhaseTrajectory integrate_hamilton(const HamiltonianModel& model, double x0, double alpha0,
                                   double T, int steps);

// Rate functional of a piecewise-linear path: Σ L(midpoint, slope)·dt.
double action_of_path(const HamiltonianModel& model, const std::vector<double>& times,
                      const std::vector<double>& states);

}  // namespace optpath
