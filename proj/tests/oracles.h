#ifndef MFTK_TESTS_ORACLES_H_
#define MFTK_TESTS_ORACLES_H_

// Independent reference computations shared by the unit tests and the
// acceptance runner. None of these call into the library under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace mftk::oracle {

// Each (positive, negative) pair scores 1 when ordered and 1/2 when tied.
inline double PairCountAuc(std::span<const double> scores, std::span<const int> labels) {
  double credit = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] != 1) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j] != 0) continue;
      pairs += 1.0;
      if (scores[i] > scores[j]) credit += 1.0;
      if (scores[i] == scores[j]) credit += 0.5;
    }
  }
  return credit / pairs;
}

// Composite Simpson rule with an even number of panels.
template <typename F>
double Simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// P(X > x) for X ~ chi-square(k), by integrating the density. Substituting
// x = t^2 removes the integrable singularity at 0 for k = 1.
inline double ChiSquareSurvivalByIntegration(double x, int k) {
  const double log_norm = -0.5 * k * std::log(2.0) - std::lgamma(0.5 * k);
  // density in t: 2 t * f(t^2) = 2 t^(k-1) e^(-t^2/2) / (2^(k/2) Gamma(k/2))
  const auto g = [&](double t) {
    if (t == 0.0) return k == 1 ? 2.0 * std::exp(log_norm) : 0.0;
    return 2.0 * std::exp(log_norm + (k - 1) * std::log(t) - 0.5 * t * t);
  };
  return 1.0 - Simpson(g, 0.0, std::sqrt(x), 20000);
}

struct OddsRatioRef {
  double odds_ratio, se, ci_low, ci_high;
};

// Odds from row-wise conditional probabilities; SE from the Woolf formula in
// long double.
inline OddsRatioRef OddsRatio(double a, double b, double c, double d) {
  const long double odds_present = static_cast<long double>(a) / (a + b) / (static_cast<long double>(b) / (a + b));
  const long double odds_absent = static_cast<long double>(c) / (c + d) / (static_cast<long double>(d) / (c + d));
  const long double ratio = odds_present / odds_absent;
  const long double se = std::sqrt(1.0L / a + 1.0L / b + 1.0L / c + 1.0L / d);
  const long double z = 1.96L;
  return {static_cast<double>(ratio), static_cast<double>(se),
          static_cast<double>(ratio / std::exp(z * se)), static_cast<double>(ratio * std::exp(z * se))};
}

// Count of pairs with x > y plus half the ties.
inline double UStatistic(std::span<const double> x, std::span<const double> y) {
  double u = 0.0;
  for (double a : x) {
    for (double b : y) u += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
  }
  return u;
}

// Exact two-sided permutation p-value of U over every relabeling of the
// pooled sample (no ties assumed): P(|U - mean| >= |u_obs - mean|).
inline double ExactMannWhitneyP(std::span<const double> x, std::span<const double> y) {
  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  const std::size_t n = pooled.size(), n1 = x.size();
  const double mean = 0.5 * static_cast<double>(x.size() * y.size());
  const double observed = std::abs(UStatistic(x, y) - mean);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n1), true);
  std::size_t extreme = 0, total = 0;
  do {
    std::vector<double> a, b;
    for (std::size_t i = 0; i < n; ++i) (pick[i] ? a : b).push_back(pooled[i]);
    if (std::abs(UStatistic(a, b) - mean) >= observed - 1e-9) ++extreme;
    ++total;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

inline double Pearson(std::span<const double> x, std::span<const double> y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace mftk::oracle

#endif  // MFTK_TESTS_ORACLES_H_
