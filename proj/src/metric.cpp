#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace ue {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<double> dense,
                                     std::vector<std::string> labels)
    : n_(n), d_(std::move(dense)), labels_(std::move(labels)) {
  if (d_.size() != n_ * n_)
    throw Error(ErrorCode::InvalidArgument, "distance matrix size mismatch");
  if (!labels_.empty() && labels_.size() != n_)
    throw Error(ErrorCode::InvalidArgument, "label count mismatch");
}

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) best = std::max(best, (*this)(i, j));
  return best;
}

double FiniteMetricSpace::min_positive() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) best = std::min(best, (*this)(i, j));
  return best;
}

FiniteMetricSpace FiniteMetricSpace::restrict(
    const std::vector<std::size_t>& subset) const {
  const std::size_t m = subset.size();
  std::vector<double> d(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) d[a * m + b] = (*this)(subset[a], subset[b]);
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.reserve(m);
    for (auto idx : subset) labels.push_back(labels_[idx]);
  }
  return FiniteMetricSpace(m, std::move(d), std::move(labels));
}

FiniteMetricSpace validate_metric(std::size_t n, const std::vector<double>& dense,
                                  std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty point set");
  if (dense.size() != n * n)
    throw Error(ErrorCode::InvalidArgument, "matrix is not n x n");
  auto at = [&](std::size_t i, std::size_t j) { return dense[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) {
      std::ostringstream os;
      os << "nonzero diagonal at (" << i << "," << i << ")";
      throw Error(ErrorCode::NotMetric, os.str());
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v))
        throw Error(ErrorCode::NotMetric, "non-finite distance entry");
      if (v != at(j, i)) {
        std::ostringstream os;
        os << "asymmetric entries at (" << i << "," << j << ")";
        throw Error(ErrorCode::NotMetric, os.str());
      }
      if (v < 0.0) {
        std::ostringstream os;
        os << "negative distance at (" << i << "," << j << ")";
        throw Error(ErrorCode::NotMetric, os.str());
      }
      if (v == 0.0) {
        std::ostringstream os;
        os << "zero distance between distinct points (" << i << "," << j
           << "); duplicated points are rejected";
        throw Error(ErrorCode::NotMetric, os.str());
      }
    }
  }
  // First violating triple in lexicographic order, reported as i < j < k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const double longest =
            std::max({at(i, j), at(i, k), at(j, k)});
        const double perimeter = at(i, j) + at(i, k) + at(j, k);
        if (longest > perimeter - longest) {
          std::ostringstream os;
          os << "triangle inequality fails on triple (" << i << "," << j << ","
             << k << "): " << longest << " > " << perimeter - longest;
          throw Error(ErrorCode::NotMetric, os.str());
        }
      }
  return FiniteMetricSpace(n, dense, std::move(labels));
}

bool is_ultrametric(const FiniteMetricSpace& m, double tol,
                    TripleWitness* witness) {
  const std::size_t n = m.size();
  bool ok = true;
  TripleWitness worst;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double slack = m(i, j) - std::max(m(i, k), m(k, j));
        if (slack > tol && (ok || slack > worst.slack)) {
          ok = false;
          worst = TripleWitness{i, j, k, slack};
        }
      }
  if (!ok && witness) *witness = worst;
  return ok;
}

double default_tolerance(const FiniteMetricSpace& m) {
  return 1e-9 * m.diameter();
}

DistortionReport distortion(const FiniteMetricSpace& source,
                            const FiniteMetricSpace& target,
                            const std::vector<std::size_t>& f) {
  const std::size_t n = source.size();
  if (f.size() != n)
    throw Error(ErrorCode::InvalidArgument, "index map size mismatch");
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "need at least two points");
  std::unordered_set<std::size_t> seen;
  for (auto t : f) {
    if (t >= target.size())
      throw Error(ErrorCode::InvalidArgument, "index map out of range");
    if (!seen.insert(t).second)
      throw Error(ErrorCode::InvalidArgument,
                  "index map is not injective: two sources collide");
  }
  DistortionReport rep;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ratio = target(f[i], f[j]) / source(i, j);
      if (ratio < lo) {
        lo = ratio;
        rep.worst_lower = PairWitness{i, j, ratio};
      }
      if (ratio > hi) {
        hi = ratio;
        rep.worst_upper = PairWitness{i, j, ratio};
      }
    }
  rep.scale = lo;
  rep.distortion = hi / lo;
  return rep;
}

}  // namespace ue
