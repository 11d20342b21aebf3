#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxcoupling/errors.hpp"

namespace maxcoupling {

/// Bivariate cost F(w, s) over (terminal value, running maximum) pairs, with
/// an optional partial derivative in s and an optional declared ridge
/// w -> a_w in R union {-inf, +inf}. Evaluators must be pure and re-entrant.
struct CostFunction {
  std::function<double(double, double)> value;
  std::function<double(double, double)> s_derivative;
  std::function<double(double)> ridge;
  std::string label;

  double operator()(double w, double s) const { return value(w, s); }
  bool has_s_derivative() const noexcept {
    return static_cast<bool>(s_derivative);
  }
  bool has_ridge() const noexcept { return static_cast<bool>(ridge); }
};

struct SupermodularWitness {
  double w1 = 0.0, w2 = 0.0, s1 = 0.0, s2 = 0.0;
  double cross_difference = 0.0;
};

struct SupermodularCheck {
  bool pass = false;
  std::optional<SupermodularWitness> witness;
};

/// Cross-difference test F(w1,s1) + F(w2,s2) - F(w1,s2) - F(w2,s1) >= 0 on all
/// adjacent grid pairs (adjacent pairs suffice: cross-differences over a grid
/// telescope). Strict mode requires the difference to exceed 1e-12.
SupermodularCheck check_supermodular(const CostFunction& F,
                                     std::span<const double> w_grid,
                                     std::span<const double> s_grid,
                                     bool strict);

/// Ridge value a_w for a single section s -> F(w, s). Returns the declared
/// ridge when present; otherwise locates the peak on [s_lo, s_hi] by ternary
/// search to tolerance tol, returning +inf when the section still increases at
/// s_hi and -inf when it already decreases at s_lo. Sections with two separate
/// local maxima on the probe grid, or with plateaus wider than tol, are not
/// serrated and raise NotUnimodal.
double ridge_of(const CostFunction& F, double w, double s_lo, double s_hi,
                double tol);

struct Ridge {
  struct Sample {
    double w = 0.0;
    double value = 0.0;  // may be +-inf
  };
  std::vector<Sample> samples;
};

Ridge sample_ridge(const CostFunction& F, std::span<const double> w_grid,
                   double s_lo, double s_hi, double tol);

struct RatioWitness {
  double w_prev = 0.0, w_next = 0.0;
  double ratio_prev = 0.0, ratio_next = 0.0;
};

struct RatioCheck {
  bool pass = false;
  std::optional<RatioWitness> witness;
};

/// Verifies that w -> F_s(w, s0) / (s0 - w) strictly increases along the grid
/// (all entries below s0).
RatioCheck check_hk_ratio(const CostFunction& F, double s0,
                          std::span<const double> w_grid);

// --- catalogue -------------------------------------------------------------

/// (arctan w + 2) * s: strictly supermodular, sections increasing (ridge +inf).
CostFunction ay_example();

/// -|w| * s: serrated with ridge -inf; not supermodular on sign-mixed grids.
CostFunction pure_jump_example();

/// (arctan w + 2) * s - 4 * (s - R(w))^+ with R(w) = slope * w + intercept,
/// slope > 0: strictly supermodular with finite increasing ridge R.
CostFunction ridge_example(double slope = 1.0, double intercept = 0.5);

enum class IndicatorKind {
  upper_right,             //  Ind{w >= a, s >= b}
  lower_left,              //  Ind{w <= a, s <= b}
  minus_open_lower_right,  // -Ind{w > a, s < b}
  minus_open_upper_left,   // -Ind{w < a, s > b}
};

/// Ind{w >= a, s >= b}; supermodular (non-strict), lower-boundary closed
/// exactly as written, no smoothing.
CostFunction indicator(double a, double b);

CostFunction indicator_variant(IndicatorKind kind, double a, double b);

/// exp(w) * (s - w)^2 / 2: F_s = (s - w) e^w, so F_s(w, s0)/(s0 - w) = e^w is
/// strictly increasing while the cross difference changes sign. Sections are
/// increasing on the feasible region {s >= max(0, w)}.
CostFunction hk_example();

/// F + Ind{w >= a, s >= b}, keeping F's declared ridge (valid when (a, b) lies
/// on the ridge of F, or when F's ridge is +inf so the jump lands in the
/// increasing part of every section).
CostFunction with_indicator(const CostFunction& F, double a, double b);

/// Plain sum; the result carries no declared ridge and keeps a derivative only
/// if both operands have one.
CostFunction cost_sum(const CostFunction& lhs, const CostFunction& rhs);

}  // namespace maxcoupling
