#include "maxcoupling/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maxcoupling {

namespace {

// Neumaier-compensated sum; keeps normalization residuals at one ulp.
double stable_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::empty_measure: return "EmptyMeasure";
    case Errc::non_finite: return "NonFinite";
    case Errc::bad_mass: return "BadMass";
    case Errc::bad_interval: return "BadInterval";
    case Errc::non_convex_quotes: return "NonConvexQuotes";
    case Errc::too_few_quotes: return "TooFewQuotes";
    case Errc::above_support: return "AboveSupport";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_centered: return "NotCentered";
    case Errc::bad_grid: return "BadGrid";
    case Errc::not_unimodal: return "NotUnimodal";
    case Errc::missing_derivative: return "MissingDerivative";
    case Errc::support_too_large: return "SupportTooLarge";
    case Errc::not_crossed: return "NotCrossed";
    case Errc::insufficient_mass: return "InsufficientMass";
    case Errc::bad_geometry: return "BadGeometry";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::iteration_limit: return "IterationLimit";
    case Errc::off_lattice: return "OffLattice";
    case Errc::no_stopped_samples: return "NoStoppedSamples";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::ridge_unavailable: return "RidgeUnavailable";
    case Errc::no_such_atom: return "NoSuchAtom";
  }
  return "UnknownError";
}

DiscreteMeasure::DiscreteMeasure(
    std::span<const std::pair<double, double>> pairs, double mean_tolerance) {
  if (mean_tolerance < 0.0) {
    throw Error(Errc::bad_mass, "mean_tolerance must be nonnegative");
  }
  mean_tolerance_ = mean_tolerance;

  std::vector<Atom> raw;
  raw.reserve(pairs.size());
  for (const auto& [x, w] : pairs) {
    if (!std::isfinite(x) || !std::isfinite(w)) {
      throw Error(Errc::non_finite, "atom position or weight is not finite");
    }
    if (w < 0.0) {
      throw Error(Errc::bad_mass, "negative atom weight");
    }
    if (w > 0.0) raw.push_back({x, w});
  }
  if (raw.empty()) {
    throw Error(Errc::empty_measure, "no positive-weight atoms");
  }

  std::sort(raw.begin(), raw.end(), [](const Atom& a, const Atom& b) {
    return a.position < b.position;
  });

  // Duplicate positions merge by exact equality only; grid control stays with
  // the caller.
  atoms_.reserve(raw.size());
  for (const Atom& a : raw) {
    if (!atoms_.empty() && atoms_.back().position == a.position) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }

  std::vector<double> weights;
  weights.reserve(atoms_.size());
  for (const Atom& a : atoms_) weights.push_back(a.weight);
  const double total = stable_sum(weights);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(Errc::non_finite, "total weight is not a positive finite real");
  }
  for (Atom& a : atoms_) a.weight /= total;

  // Largest atom absorbs the one-ulp normalization residual so that weights
  // sum to exactly 1.0.
  weights.clear();
  for (const Atom& a : atoms_) weights.push_back(a.weight);
  const double normalized = stable_sum(weights);
  if (normalized != 1.0) {
    auto largest = std::max_element(
        atoms_.begin(), atoms_.end(),
        [](const Atom& a, const Atom& b) { return a.weight < b.weight; });
    largest->weight += 1.0 - normalized;
  }

  std::vector<double> first_moments;
  first_moments.reserve(atoms_.size());
  for (const Atom& a : atoms_) first_moments.push_back(a.position * a.weight);
  mean_ = stable_sum(first_moments);

  std::vector<double> second_moments;
  second_moments.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    const double d = a.position - mean_;
    second_moments.push_back(d * d * a.weight);
  }
  variance_ = stable_sum(second_moments);

  centered_ = std::abs(mean_) <= mean_tolerance_;
}

double DiscreteMeasure::mass_at_least(double x) const noexcept {
  double m = 0.0;
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (it->position >= x) m += it->weight;
    else break;
  }
  return m;
}

double DiscreteMeasure::mass_greater(double x) const noexcept {
  double m = 0.0;
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (it->position > x) m += it->weight;
    else break;
  }
  return m;
}

DiscreteMeasure build_measure(std::span<const std::pair<double, double>> pairs,
                              double mean_tolerance) {
  return DiscreteMeasure(pairs, mean_tolerance);
}

DiscreteMeasure discretize_uniform(double a, double b, std::size_t n) {
  if (!(a < b)) {
    throw Error(Errc::bad_interval, "interval requires a < b");
  }
  if (n == 0) {
    throw Error(Errc::bad_interval, "atom count must be at least 1");
  }
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x =
        a + (b - a) * (2.0 * static_cast<double>(i) - 1.0) /
                (2.0 * static_cast<double>(n));
    pairs.emplace_back(x, w);
  }
  return DiscreteMeasure(pairs);
}

DiscreteMeasure breeden_litzenberger(std::span<const Quote> quotes,
                                     double forward, double mean_tolerance) {
  if (quotes.size() < 3) {
    throw Error(Errc::too_few_quotes, "need at least 3 quotes, got " +
                                          std::to_string(quotes.size()));
  }
  const std::size_t n = quotes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(quotes[i].strike) || !std::isfinite(quotes[i].price)) {
      throw Error(Errc::non_finite, "quote strike or price is not finite");
    }
    if (quotes[i].price < 0.0) {
      throw Error(Errc::non_convex_quotes,
                  "negative call price at strike " +
                      std::to_string(quotes[i].strike));
    }
    if (i > 0 && !(quotes[i].strike > quotes[i - 1].strike)) {
      throw Error(Errc::bad_grid, "strikes must be strictly increasing");
    }
  }

  constexpr double kTol = 1e-9;
  std::vector<double> slopes(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    slopes[i] = (quotes[i + 1].price - quotes[i].price) /
                (quotes[i + 1].strike - quotes[i].strike);
    if (slopes[i] > kTol) {
      throw Error(Errc::non_convex_quotes,
                  "call prices increase in strike near " +
                      std::to_string(quotes[i].strike));
    }
    if (slopes[i] < -1.0 - kTol) {
      throw Error(Errc::non_convex_quotes,
                  "call spread steeper than -1 near " +
                      std::to_string(quotes[i].strike));
    }
  }

  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(n);
  // Residual mass 1 - sum(interior) equals (1 + first slope) + (-last slope)
  // exactly (the interior weights telescope), so the proportional-slope
  // boundary rule conserves total mass without renormalization surprises.
  pairs.emplace_back(quotes.front().strike - forward,
                     std::max(0.0, 1.0 + slopes.front()));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double w = slopes[i] - slopes[i - 1];
    if (w < -kTol) {
      throw Error(Errc::non_convex_quotes,
                  "negative implied density at strike " +
                      std::to_string(quotes[i].strike));
    }
    pairs.emplace_back(quotes[i].strike - forward, std::max(0.0, w));
  }
  pairs.emplace_back(quotes.back().strike - forward,
                     std::max(0.0, -slopes.back()));

  return DiscreteMeasure(pairs, mean_tolerance);
}

}  // namespace maxcoupling
