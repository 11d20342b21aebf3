#include "maxcoupling/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace maxcoupling {

namespace {

constexpr double kStrictTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_grid(std::span<const double> grid, const char* name) {
  if (grid.size() < 2) {
    throw Error(Errc::bad_grid, std::string(name) + " needs at least 2 points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(Errc::bad_grid,
                  std::string(name) + " must be strictly ascending");
    }
  }
}

}  // namespace

SupermodularCheck check_supermodular(const CostFunction& F,
                                     std::span<const double> w_grid,
                                     std::span<const double> s_grid,
                                     bool strict) {
  require_grid(w_grid, "w_grid");
  require_grid(s_grid, "s_grid");
  for (std::size_t i = 0; i + 1 < w_grid.size(); ++i) {
    for (std::size_t j = 0; j + 1 < s_grid.size(); ++j) {
      const double w1 = w_grid[i], w2 = w_grid[i + 1];
      const double s1 = s_grid[j], s2 = s_grid[j + 1];
      const double d = F(w1, s1) + F(w2, s2) - F(w1, s2) - F(w2, s1);
      const bool ok = strict ? d > kStrictTol : d >= -kStrictTol;
      if (!ok) {
        return {false, SupermodularWitness{w1, w2, s1, s2, d}};
      }
    }
  }
  return {true, std::nullopt};
}

double ridge_of(const CostFunction& F, double w, double s_lo, double s_hi,
                double tol) {
  if (F.has_ridge()) return F.ridge(w);
  if (!(s_lo < s_hi)) {
    throw Error(Errc::bad_grid, "ridge_of requires s_lo < s_hi");
  }
  if (!(tol > 0.0)) {
    throw Error(Errc::bad_grid, "ridge_of requires tol > 0");
  }

  constexpr std::size_t kProbes = 129;
  double probe[kProbes];
  double val[kProbes];
  for (std::size_t i = 0; i < kProbes; ++i) {
    probe[i] = s_lo + (s_hi - s_lo) * static_cast<double>(i) /
                          static_cast<double>(kProbes - 1);
    val[i] = F(w, probe[i]);
  }

  // Serrated sections read +...+-...- in difference signs. A + after a - is a
  // second local maximum; a zero-run wider than tol is a plateau we refuse to
  // classify.
  bool seen_decrease = false;
  std::size_t last_increase = 0;
  std::size_t first_decrease = kProbes - 1;
  std::size_t plateau_start = kProbes;
  for (std::size_t i = 0; i + 1 < kProbes; ++i) {
    const double d = val[i + 1] - val[i];
    if (d > 0.0) {
      if (seen_decrease) {
        throw Error(Errc::not_unimodal,
                    "section has two local maxima near s = " +
                        std::to_string(probe[i + 1]));
      }
      last_increase = i + 1;
      plateau_start = kProbes;
    } else if (d < 0.0) {
      if (!seen_decrease) first_decrease = i;
      seen_decrease = true;
      plateau_start = kProbes;
    } else {
      if (plateau_start == kProbes) plateau_start = i;
      if (probe[i + 1] - probe[plateau_start] > tol) {
        throw Error(Errc::not_unimodal,
                    "section has a plateau wider than tol near s = " +
                        std::to_string(probe[plateau_start]));
      }
    }
  }
  if (!seen_decrease) return kInf;
  if (last_increase == 0) return -kInf;

  double lo = probe[last_increase > 0 ? last_increase - 1 : 0];
  double hi = probe[std::min(first_decrease + 1, kProbes - 1)];
  while (hi - lo > tol) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (F(w, m1) < F(w, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

Ridge sample_ridge(const CostFunction& F, std::span<const double> w_grid,
                   double s_lo, double s_hi, double tol) {
  Ridge r;
  r.samples.reserve(w_grid.size());
  for (double w : w_grid) {
    r.samples.push_back({w, ridge_of(F, w, s_lo, s_hi, tol)});
  }
  return r;
}

RatioCheck check_hk_ratio(const CostFunction& F, double s0,
                          std::span<const double> w_grid) {
  if (!F.has_s_derivative()) {
    throw Error(Errc::missing_derivative,
                "check_hk_ratio requires F.s_derivative");
  }
  require_grid(w_grid, "w_grid");
  if (!(s0 > 0.0)) {
    throw Error(Errc::bad_grid, "check_hk_ratio requires s0 > 0");
  }
  if (!(w_grid.back() < s0)) {
    throw Error(Errc::bad_grid, "w_grid entries must lie below s0");
  }
  double prev = F.s_derivative(w_grid[0], s0) / (s0 - w_grid[0]);
  for (std::size_t i = 1; i < w_grid.size(); ++i) {
    const double next = F.s_derivative(w_grid[i], s0) / (s0 - w_grid[i]);
    if (!(next - prev > kStrictTol)) {
      return {false, RatioWitness{w_grid[i - 1], w_grid[i], prev, next}};
    }
    prev = next;
  }
  return {true, std::nullopt};
}

CostFunction ay_example() {
  CostFunction F;
  F.value = [](double w, double s) { return (std::atan(w) + 2.0) * s; };
  F.s_derivative = [](double w, double) { return std::atan(w) + 2.0; };
  F.ridge = [](double) { return kInf; };
  F.label = "ay_example";
  return F;
}

CostFunction pure_jump_example() {
  CostFunction F;
  F.value = [](double w, double s) { return -std::abs(w) * s; };
  F.s_derivative = [](double w, double) { return -std::abs(w); };
  F.ridge = [](double) { return -kInf; };
  F.label = "pure_jump_example";
  return F;
}

CostFunction ridge_example(double slope, double intercept) {
  CostFunction F;
  F.value = [slope, intercept](double w, double s) {
    const double r = slope * w + intercept;
    const double excess = s >= r ? s - r : 0.0;
    return (std::atan(w) + 2.0) * s - 4.0 * excess;
  };
  F.s_derivative = [slope, intercept](double w, double s) {
    const double r = slope * w + intercept;
    return (std::atan(w) + 2.0) - (s >= r ? 4.0 : 0.0);
  };
  F.ridge = [slope, intercept](double w) { return slope * w + intercept; };
  F.label = "ridge_example(slope=" + std::to_string(slope) +
            ",intercept=" + std::to_string(intercept) + ")";
  return F;
}

CostFunction indicator(double a, double b) {
  CostFunction F;
  F.value = [a, b](double w, double s) {
    return (w >= a && s >= b) ? 1.0 : 0.0;
  };
  F.ridge = [](double) { return kInf; };
  F.label = "indicator(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
            ")";
  return F;
}

CostFunction indicator_variant(IndicatorKind kind, double a, double b) {
  CostFunction F;
  switch (kind) {
    case IndicatorKind::upper_right:
      return indicator(a, b);
    case IndicatorKind::lower_left:
      F.value = [a, b](double w, double s) {
        return (w <= a && s <= b) ? 1.0 : 0.0;
      };
      F.ridge = [](double) { return -kInf; };
      F.label = "indicator_lower_left";
      break;
    case IndicatorKind::minus_open_lower_right:
      F.value = [a, b](double w, double s) {
        return (w > a && s < b) ? -1.0 : 0.0;
      };
      F.ridge = [](double) { return kInf; };
      F.label = "indicator_minus_open_lower_right";
      break;
    case IndicatorKind::minus_open_upper_left:
      F.value = [a, b](double w, double s) {
        return (w < a && s > b) ? -1.0 : 0.0;
      };
      F.ridge = [](double) { return -kInf; };
      F.label = "indicator_minus_open_upper_left";
      break;
  }
  return F;
}

CostFunction hk_example() {
  CostFunction F;
  F.value = [](double w, double s) {
    const double d = s - w;
    return 0.5 * std::exp(w) * d * d;
  };
  F.s_derivative = [](double w, double s) { return (s - w) * std::exp(w); };
  F.ridge = [](double) { return kInf; };
  F.label = "hk_example";
  return F;
}

CostFunction with_indicator(const CostFunction& F, double a, double b) {
  CostFunction G;
  auto base = F.value;
  G.value = [base, a, b](double w, double s) {
    return base(w, s) + ((w >= a && s >= b) ? 1.0 : 0.0);
  };
  G.s_derivative = F.s_derivative;
  G.ridge = F.ridge;
  G.label = F.label + "+indicator(a=" + std::to_string(a) +
            ",b=" + std::to_string(b) + ")";
  return G;
}

CostFunction cost_sum(const CostFunction& lhs, const CostFunction& rhs) {
  CostFunction G;
  auto l = lhs.value;
  auto r = rhs.value;
  G.value = [l, r](double w, double s) { return l(w, s) + r(w, s); };
  if (lhs.has_s_derivative() && rhs.has_s_derivative()) {
    auto ld = lhs.s_derivative;
    auto rd = rhs.s_derivative;
    G.s_derivative = [ld, rd](double w, double s) {
      return ld(w, s) + rd(w, s);
    };
  }
  G.label = lhs.label + "+" + rhs.label;
  return G;
}

}  // namespace maxcoupling
