#pragma once

// Test-only reference computations. Deliberately written from the textbook
// definitions with quadratic loops and no shared code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using IndexSet = std::set<std::size_t>;

inline std::size_t count_at_most(const std::vector<double>& p, double t) {
  std::size_t n = 0;
  for (double v : p) n += v <= t ? 1 : 0;
  return n;
}

// Largest passing rank of a step-up rule, with rank of p_j taken as the
// number of p-values <= p_j. Returns the rejected index set {i : p_i <= p*}.
template <typename Level>
IndexSet step_up_by_counting(const std::vector<double>& p, Level level) {
  bool found = false;
  double best = 0.0;
  for (double pj : p) {
    const std::size_t rank = count_at_most(p, pj);
    if (pj <= level(rank) && (!found || pj > best)) {
      best = pj;
      found = true;
    }
  }
  IndexSet out;
  if (!found) return out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= best) out.insert(i);
  }
  return out;
}

inline IndexSet bh(const std::vector<double>& p, double q) {
  const double m = static_cast<double>(p.size());
  return step_up_by_counting(p, [&](std::size_t r) { return static_cast<double>(r) * q / m; });
}

inline IndexSet hochberg(const std::vector<double>& p, double alpha) {
  const std::size_t m = p.size();
  return step_up_by_counting(
      p, [&](std::size_t r) { return alpha / static_cast<double>(m - r + 1); });
}

// Step-down: hypothesis i is rejected iff every p-value ranked at or before
// it passes its own level.
inline IndexSet holm(const std::vector<double>& p, double alpha) {
  std::vector<double> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = p.size();
  std::size_t passed = 0;
  while (passed < m && sorted[passed] <= alpha / static_cast<double>(m - passed)) ++passed;
  IndexSet out;
  if (passed == 0) return out;
  const double last = sorted[passed - 1];
  for (std::size_t i = 0; i < m; ++i) {
    if (p[i] <= last) out.insert(i);
  }
  return out;
}

inline IndexSet single_level(const std::vector<double>& p, double level) {
  IndexSet out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= level) out.insert(i);
  }
  return out;
}

// Standard normal distribution function in extended precision: Taylor
// series of the integral for |x| <= 5, Mills-ratio continued fraction beyond.
inline long double normal_cdf(long double x) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double density = std::exp(-x * x / 2) / std::sqrt(2 * pi);
  if (std::fabs(x) <= 5) {
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 400; ++n) {
      term *= x * x / (2 * n + 1);
      sum += term;
      if (std::fabs(term) < 1e-30L * std::fabs(sum)) break;
    }
    return 0.5L + density * sum;
  }
  const long double y = std::fabs(x);
  long double frac = 0;
  for (int k = 500; k >= 1; --k) frac = k / (y + frac);
  const long double tail = density / (y + frac);
  return x > 0 ? 1 - tail : tail;
}

inline double ks_uniform_statistic(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, sample[i] - lo, hi - sample[i]});
  }
  return d;
}

inline double sample_sd(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Random p-vectors for property checks: a mix of uniform values, values
// squeezed toward zero, and repeated values to exercise ties.
inline std::vector<double> random_pvalues(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 9);
  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int k = kind(rng);
    if (k < 4) {
      p[i] = unit(rng);
    } else if (k < 8) {
      p[i] = std::pow(unit(rng), 4.0) * 0.2;
    } else if (i > 0) {
      p[i] = p[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    } else {
      p[i] = unit(rng) * 0.01;
    }
  }
  return p;
}

}  // namespace oracle
