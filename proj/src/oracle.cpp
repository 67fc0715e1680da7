#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace ue {

double optimal_ultra_distortion(const FiniteMetricSpace& m) {
  if (m.size() < 2) return 1.0;
  UltraSpace u = subdominant_ultrametric(m);
  double worst = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      worst = std::max(worst, m(i, j) / u.base(i, j));
  return worst;
}

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SubsetSearchResult search(const FiniteMetricSpace& m, std::size_t cap,
                          const std::function<double(const FiniteMetricSpace&)>&
                              objective,
                          double bound) {
  const std::size_t n = m.size();
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "instance exceeds the enumeration cap");
  SubsetSearchResult res;
  for (std::size_t k = n; k >= 1; --k) {
    bool found = for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      ++res.enumerated;
      const double obj = objective(m.restrict(s));
      if (obj <= bound) {
        res.subset = s;
        res.objective = obj;
        return true;
      }
      return false;
    });
    if (found) break;
  }
  return res;
}

}  // namespace

SubsetSearchResult best_subset_under_distortion(const FiniteMetricSpace& m,
                                                double bound, std::size_t cap) {
  if (bound < 1.0)
    throw Error(ErrorCode::InvalidArgument, "distortion bound must be >= 1");
  // Slack absorbs roundoff in the ratio computation only.
  const double slack = bound * 1e-12;
  return search(
      m, cap, [](const FiniteMetricSpace& s) { return optimal_ultra_distortion(s); },
      bound + slack);
}

SubsetSearchResult best_equilateral_subset(const FiniteMetricSpace& m,
                                           double eps, std::size_t cap) {
  if (!(eps > 0.0))
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  auto ratio = [](const FiniteMetricSpace& s) {
    if (s.size() < 2) return 1.0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        lo = std::min(lo, s(i, j));
        hi = std::max(hi, s(i, j));
      }
    return hi / lo;
  };
  return search(m, cap, ratio, 1.0 + eps);
}

}  // namespace ue
