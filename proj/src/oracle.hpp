#pragma once

#include <cstddef>
#include <vector>

#include "ultra.hpp"

namespace ue {

struct SubsetSearchResult {
  std::vector<std::size_t> subset;
  double objective = 0.0;     // achieved distortion or max/min ratio
  std::size_t enumerated = 0; // subsets examined
};

/// Minimal distortion of embedding m into any ultrametric space:
/// max d/u over pairs, u the subdominant ultrametric.
double optimal_ultra_distortion(const FiniteMetricSpace& m);

/// Largest subset S with optimal_ultra_distortion(m|S) <= bound. Exponential
/// enumeration, guarded by `cap` (default 16). Ties broken by lexicographic
/// subset order; sizes enumerated largest-first with early exit.
SubsetSearchResult best_subset_under_distortion(const FiniteMetricSpace& m,
                                                double bound,
                                                std::size_t cap = 16);

/// Largest subset whose pairwise distances satisfy max <= (1+eps) * min.
SubsetSearchResult best_equilateral_subset(const FiniteMetricSpace& m,
                                           double eps, std::size_t cap = 16);

}  // namespace ue
