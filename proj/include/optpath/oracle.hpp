#pragma once

#include <utility>

#include "optpath/errors.hpp"

namespace optpath {

// Affine-drift Gaussian instance (κ = 2, b(x) = a0 + a1 x). Everything about
// this family is available in closed form, which makes it the ground truth
// for the chain, the bridges and the limit drifts.
struct AffineGaussianModel {
  double a0, a1, sigma, epsilon, T;
  int steps;     // N = floor(T/ε)
  double delta;  // Δ = T − Nε

  AffineGaussianModel(double a0_, double a1_, double sigma_, double epsilon_, double T_);
};

struct BridgeMoments {
  double mean;
  double variance;
};

// Unconditioned chain: mean/variance of x(t) given x(s) = xs.
BridgeMoments forward_moments(const AffineGaussianModel& m, double xs, double s, double t);

// Forward bridge x̃: moments of the chain at t conditioned on both endpoints.
BridgeMoments nppd_moments(const AffineGaussianModel& m, double x0, double xT, double t);

// Backward bridge x̄ on the shifted lattice Δ + mε, started at xT.
BridgeMoments reversed_moments(const AffineGaussianModel& m, double x0, double xT, double t);

// One-step Gaussian parameters of the conditioned jump measure at state x and
// step m. The same expression serves the backward chain (pin = x0) and the
// forward bridge (pin = xT); remaining time is (N − m)ε in both lattices.
BridgeMoments reversed_jump_params(const AffineGaussianModel& m, double x, double x_pin, int step);

// Density-ratio probe for the a1 = 0 case. Returns
// (lhs, rhs) = (p(x+εz, t−ε|x0,0)/p(x, t|x0,0), exp(−z·S_x + S_t)) with the
// analytic action S(x,t|x0) = (x − x0 − a0 t)²/(σ² t).
std::pair<double, double> density_ratio_check(const AffineGaussianModel& m, double x0, double x,
                                              double t, double z);

double gaussian_pdf(double x, double mean, double variance);

}  // namespace optpath
