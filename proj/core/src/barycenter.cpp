#include "maxcoupling/barycenter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maxcoupling {

BarycenterFunction::BarycenterFunction(const DiscreteMeasure& mu) {
  const auto& atoms = mu.atoms();
  const std::size_t n = atoms.size();
  breakpoints_.resize(n);
  values_.resize(n);
  double tail_mass = 0.0;
  double tail_moment = 0.0;
  for (std::size_t r = n; r-- > 0;) {
    tail_mass += atoms[r].weight;
    tail_moment += atoms[r].position * atoms[r].weight;
    breakpoints_[r] = atoms[r].position;
    values_[r] = tail_moment / tail_mass;
  }
}

double BarycenterFunction::operator()(double k) const {
  if (k > breakpoints_.back()) {
    throw Error(Errc::above_support,
                "beta(" + std::to_string(k) + ") queried above the largest atom");
  }
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), k);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

InversePoint BarycenterFunction::inverse(double l) const {
  if (l < values_.front() || l > values_.back()) {
    throw Error(Errc::out_of_range,
                "inverse barycenter level " + std::to_string(l) +
                    " outside [" + std::to_string(values_.front()) + ", " +
                    std::to_string(values_.back()) + "]");
  }
  auto it = std::lower_bound(values_.begin(), values_.end(), l);
  const std::size_t j = static_cast<std::size_t>(it - values_.begin());
  if (j == 0) {
    return {breakpoints_.front(), TailSide::closed};
  }
  // beta jumps from values[j-1] < l to values[j] >= l just above
  // breakpoints[j-1]; the infimum sits at the breakpoint but is not attained.
  return {breakpoints_[j - 1], TailSide::open};
}

BarycenterFunction barycenter(const DiscreteMeasure& mu) {
  return BarycenterFunction(mu);
}

InversePoint inverse_barycenter(const BarycenterFunction& beta, double l) {
  return beta.inverse(l);
}

std::vector<SurvivalPoint> max_law(const DiscreteMeasure& mu) {
  if (!mu.centered()) {
    throw Error(Errc::not_centered,
                "max_law requires a centered measure, mean = " +
                    std::to_string(mu.mean()));
  }
  const BarycenterFunction beta(mu);
  std::vector<SurvivalPoint> out;
  out.reserve(beta.values().size() + 1);
  // The maximum of a martingale started at 0 is >= 0 almost surely.
  out.push_back({0.0, 1.0});
  for (std::size_t i = 1; i < beta.values().size(); ++i) {
    const double level = beta.values()[i];
    if (level == 0.0) continue;
    const InversePoint p = beta.inverse(level);
    const double prob = (p.side == TailSide::closed)
                            ? mu.mass_at_least(p.position)
                            : mu.mass_greater(p.position);
    out.push_back({level, prob});
  }
  return out;
}

}  // namespace maxcoupling
