#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace assertlint::stats {

/// Linear-interpolation quantile of sorted data (Hyndman and Fan type 7,
/// the default of R and numpy).
inline double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

/// Middle value, or the mean of the two middle values for even n.
inline double median(const std::vector<double>& sorted) {
  if (sorted.empty()) return 0.0;
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

/// Sum in ascending order, divided by n.
inline double mean(const std::vector<double>& sorted) {
  if (sorted.empty()) return 0.0;
  return std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
}

/// Most frequent value after rounding to two decimals; ties go to the smallest.
inline double mode(const std::vector<double>& values) {
  std::map<double, std::size_t> freq;
  for (double v : values) ++freq[std::round(v * 100.0) / 100.0];
  double best = 0.0;
  std::size_t best_count = 0;
  for (const auto& [value, count] : freq) {
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  }
  return best;
}

struct Summary {
  std::size_t n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mode = 0.0;
};

inline Summary summarize(std::vector<double> values) {
  Summary s;
  std::sort(values.begin(), values.end());
  s.n = values.size();
  if (values.empty()) return s;
  s.min = values.front();
  s.q1 = quantile(values, 0.25);
  s.median = median(values);
  s.mean = stats::mean(values);
  s.q3 = quantile(values, 0.75);
  s.max = values.back();
  s.mode = stats::mode(values);
  return s;
}

/// 100 * part / whole rounded to two decimals; 0 when whole is 0.
inline double percent(double part, double whole) {
  if (whole <= 0.0) return 0.0;
  return std::round(100.0 * part / whole * 100.0) / 100.0;
}

}  // namespace assertlint::stats
