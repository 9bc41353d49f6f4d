#pragma once

#include <random>
#include <string>
#include <vector>

#include "optpath/errors.hpp"

namespace optpath {

enum class DriftKind { Zero, Affine, Bistable, Custom };

// State-dependent mean b(x) of the jump measure. The catalog holds the drifts
// used throughout: zero, affine a0 + a1*x, the bistable (x - x^3)/(1 + |x|^3),
// and a rational form num(x)/den(|x|) for custom entries. Catalog drifts carry
// analytic derivatives; custom ones fall back to central differences.
class DriftFunction {
 public:
  static DriftFunction zero();
  static DriftFunction affine(double a0, double a1);
  static DriftFunction bistable();
  // num: polynomial in x (ascending coefficients); den: polynomial in |x|,
  // den[0] > 0 and all coefficients >= 0 so the denominator never vanishes.
  static DriftFunction custom(std::vector<double> num, std::vector<double> den);

  double operator()(double x) const;
  double derivative(double x) const;

  DriftKind kind() const { return kind_; }
  double a0() const { return a0_; }
  double a1() const { return a1_; }
  std::string name() const;

 private:
  DriftFunction() = default;
  DriftKind kind_ = DriftKind::Zero;
  double a0_ = 0.0, a1_ = 0.0;
  std::vector<double> num_, den_;
};

// Generalized-Gaussian jump measure: density ∝ exp(-|z - b(x)|^κ / σ^κ),
// shape κ > 1, scale σ > 0. κ = 2 is Gaussian with variance σ²/2.
struct JumpMeasure {
  DriftFunction drift;
  double kappa;
  double sigma;

  JumpMeasure(DriftFunction d, double kappa_, double sigma_);

  double mean(double x) const { return drift(x); }
  double density(double x, double z) const;
  // P(Z <= z) given state x.
  double cdf(double x, double z) const;
  // mass of [lo, hi); lo/hi may be +-infinity.
  double interval_probability(double x, double lo, double hi) const;
  // one draw; exact rejection-free sampling via |Z-b| = σ G^{1/κ}, G ~ Gamma(1/κ,1).
  double sample(double x, std::mt19937_64& rng) const;
};

// A full problem instance: measure, jump scale ε, horizon T and endpoints.
struct ModelSpec {
  JumpMeasure measure;
  double epsilon;
  double horizon;
  double x0;
  double xT;

  ModelSpec(JumpMeasure m, double epsilon_, double horizon_, double x0_, double xT_);

  int steps() const;                   // N = floor(T/ε) >= 1
  double lattice_remainder() const;    // Δ = T - Nε
};

// Right-continuous step sample path: states[k] holds the value on
// [times[k], times[k+1]), and the last value extends to the horizon.
struct PathSample {
  std::vector<double> times;
  std::vector<double> states;

  double value_at(double t) const;
};

PathSample simulate_forward(const ModelSpec& spec, std::mt19937_64& rng);

// RK4 solution of the ε→0 limit ODE xdot = b(x) on [0, T].
PathSample deterministic_limit(const ModelSpec& spec, int steps);

// Floor/ceil of t/ε with a relative slack so lattice times computed in floating
// point land on the intended index.
int lattice_floor(double t, double eps);
int lattice_ceil(double t, double eps);

}  // namespace optpath
