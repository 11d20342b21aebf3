#pragma once

#include <span>
#include <vector>

#include "maxcoupling/measure.hpp"

namespace maxcoupling {

/// Which end of the tail [position, +inf) a generalized-inverse query landed
/// on: `closed` when the infimum is attained (the tail includes the returned
/// position), `open` when it is not (the tail excludes it). Atomic measures
/// make the two differ by the atom mass, so the flag travels with the value
/// instead of being resolved numerically.
enum class TailSide { closed, open };

struct InversePoint {
  double position = 0.0;
  TailSide side = TailSide::closed;
};

struct SurvivalPoint {
  double level = 0.0;
  double prob = 0.0;
};

/// Nondecreasing step function beta(k) = E[x | x >= k] of a discrete measure,
/// with the tail {x >= k} closed at k: on (breakpoints[i-1], breakpoints[i]]
/// evaluation returns values[i], at or below the smallest atom it returns the
/// full mean, above the largest atom the conditional expectation is over an
/// empty tail and evaluation throws AboveSupport.
class BarycenterFunction {
 public:
  explicit BarycenterFunction(const DiscreteMeasure& mu);

  double operator()(double k) const;

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  double base_value() const noexcept { return values_.front(); }
  double max_value() const noexcept { return values_.back(); }

  /// Generalized (left-continuous) inverse inf{ k : beta(k) >= l }, with the
  /// infimum clamped to the evaluation domain [smallest atom, largest atom].
  InversePoint inverse(double l) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

BarycenterFunction barycenter(const DiscreteMeasure& mu);

InversePoint inverse_barycenter(const BarycenterFunction& beta, double l);

/// Survival function l -> mu([psi(l), +inf)) of the graph-coupling law of the
/// running maximum, evaluated at level 0 and at every tail-mean value. This is
/// the map-based law: exact in the atomless limit, a lower envelope of the
/// randomized extremal law when mu has large atoms.
std::vector<SurvivalPoint> max_law(const DiscreteMeasure& mu);

}  // namespace maxcoupling
