#include "stream.hpp"

#include <memory>
#include <numeric>

namespace ue {

PointStream PointStream::from_matrix(const FiniteMetricSpace& m,
                                     std::optional<std::size_t> limit) {
  auto shared = std::make_shared<FiniteMetricSpace>(m);
  PointStream s;
  s.dist = [shared](std::size_t i, std::size_t j) { return (*shared)(i, j); };
  s.horizon = m.size();
  s.limit_index = limit;
  return s;
}

FiniteMetricSpace PointStream::prefix(std::size_t count) const {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  return restrict(idx);
}

FiniteMetricSpace PointStream::restrict(
    const std::vector<std::size_t>& subset) const {
  const std::size_t m = subset.size();
  std::vector<double> d(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const double v = dist(subset[a], subset[b]);
      d[a * m + b] = v;
      d[b * m + a] = v;
    }
  return FiniteMetricSpace(m, std::move(d));
}

}  // namespace ue
