#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "maxcoupling/errors.hpp"

namespace maxcoupling {

struct Atom {
  double position = 0.0;
  double weight = 0.0;
};

/// Centred (or at least centring-aware) discrete probability measure on the
/// real line. Atoms are strictly increasing in position, weights are strictly
/// positive and sum to 1 exactly (the largest weight absorbs the rounding
/// residual of the normalization so rebuilding a measure from its own atoms
/// is a bit-exact no-op). Immutable after construction.
class DiscreteMeasure {
 public:
  static constexpr double kDefaultMeanTolerance = 1e-9;

  DiscreteMeasure(std::span<const std::pair<double, double>> pairs,
                  double mean_tolerance = kDefaultMeanTolerance);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }
  double mean_tolerance() const noexcept { return mean_tolerance_; }
  bool centered() const noexcept { return centered_; }
  double min_position() const noexcept { return atoms_.front().position; }
  double max_position() const noexcept { return atoms_.back().position; }

  /// mu([x, +inf))
  double mass_at_least(double x) const noexcept;
  /// mu((x, +inf))
  double mass_greater(double x) const noexcept;

 private:
  std::vector<Atom> atoms_;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double mean_tolerance_ = kDefaultMeanTolerance;
  bool centered_ = false;
};

DiscreteMeasure build_measure(
    std::span<const std::pair<double, double>> pairs,
    double mean_tolerance = DiscreteMeasure::kDefaultMeanTolerance);

/// n midpoint atoms of the uniform law on (a, b), each of weight 1/n.
DiscreteMeasure discretize_uniform(double a, double b, std::size_t n);

struct Quote {
  double strike = 0.0;
  double price = 0.0;
};

/// Terminal law implied by European call quotes: interior weights are the
/// slope differences of the piecewise-linear price curve (the usual second
/// difference on uniform grids), boundary mass is assigned from the one-sided
/// slopes. Positions are shifted by the forward; centredness is reported, not
/// enforced.
DiscreteMeasure breeden_litzenberger(
    std::span<const Quote> quotes, double forward,
    double mean_tolerance = DiscreteMeasure::kDefaultMeanTolerance);

}  // namespace maxcoupling
