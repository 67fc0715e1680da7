#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "metric.hpp"

namespace ue {

/// Distance oracle over a finite horizon of points. Any finite prefix must
/// restrict to a valid FiniteMetricSpace.
struct PointStream {
  std::function<double(std::size_t, std::size_t)> dist;
  std::size_t horizon = 0;
  std::optional<std::size_t> limit_index;  // designated x_inf, when known

  static PointStream from_matrix(const FiniteMetricSpace& m,
                                 std::optional<std::size_t> limit = {});

  FiniteMetricSpace prefix(std::size_t count) const;
  FiniteMetricSpace restrict(const std::vector<std::size_t>& subset) const;
};

}  // namespace ue
