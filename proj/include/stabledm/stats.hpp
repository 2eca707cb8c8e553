#pragma once

// Kolmogorov-Smirnov statistics and asymptotic critical values.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace stabledm {

// One-sample KS statistic sup_x |F_n(x) - F(x)| for sorted samples against
// a reference CDF.  Unsorted input is rejected.
inline double ks_one_sample(const std::vector<double>& sorted,
                            const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw std::domain_error("ks_one_sample: empty sample");
  double n = static_cast<double>(sorted.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] < sorted[i - 1])
      throw std::domain_error("ks_one_sample: samples must be sorted");
    double f = cdf(sorted[i]);
    stat = std::max(stat, std::max((i + 1) / n - f, f - i / n));
  }
  return stat;
}

// Two-sample KS statistic sup |F_a - F_b| by a merge walk.
inline double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double stat = 0.0;
  while (i < a.size() && j < b.size()) {
    if (i > 0 && a[i] < a[i - 1]) throw std::domain_error("ks_two_sample: a must be sorted");
    if (j > 0 && b[j] < b[j - 1]) throw std::domain_error("ks_two_sample: b must be sorted");
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    stat = std::max(stat, std::abs(i / na - j / nb));
  }
  return stat;
}

// Asymptotic critical values; c = 1.63 corresponds to the 1% level.
inline double ks_critical_one_sample(std::size_t n, double c = 1.63) {
  return c / std::sqrt(static_cast<double>(n));
}

inline double ks_critical_two_sample(std::size_t n, std::size_t m, double c = 1.63) {
  double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

inline std::vector<double> sorted_copy(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace stabledm
