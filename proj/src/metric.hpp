#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace ue {

/// Symmetric distance matrix over indexed points.
class FiniteMetricSpace {
public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::size_t n, std::vector<double> dense,
                    std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }
  const std::vector<double>& dense() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double diameter() const;
  double min_positive() const;

  /// Restriction to a subset of point indices (order preserved).
  FiniteMetricSpace restrict(const std::vector<std::size_t>& subset) const;

private:
  std::size_t n_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
};

struct TripleWitness {
  std::size_t i = 0, j = 0, k = 0;
  double slack = 0.0;  // amount by which the inequality fails
};

/// Checks symmetry, zero diagonal, positivity off the diagonal and every
/// triangle inequality. Throws Error(NotMetric) with the first violating
/// triple in lexicographic order.
FiniteMetricSpace validate_metric(std::size_t n, const std::vector<double>& dense,
                                  std::vector<std::string> labels = {});

/// Strong triangle inequality check within additive tolerance `tol`.
/// On failure `witness` (if non-null) receives the worst-violating triple.
bool is_ultrametric(const FiniteMetricSpace& m, double tol,
                    TripleWitness* witness = nullptr);

/// Default additive tolerance used when the caller does not supply one.
double default_tolerance(const FiniteMetricSpace& m);

struct PairWitness {
  std::size_t i = 0, j = 0;
  double ratio = 0.0;
};

struct DistortionReport {
  double scale = 1.0;       // r = min pair ratio
  double distortion = 1.0;  // D = max ratio / min ratio
  PairWitness worst_lower;  // pair achieving the min ratio
  PairWitness worst_upper;  // pair achieving the max ratio
};

/// Distortion of the injective index map f : source -> target.
/// Ratios are d_target(f(i), f(j)) / d_source(i, j) over all pairs.
DistortionReport distortion(const FiniteMetricSpace& source,
                            const FiniteMetricSpace& target,
                            const std::vector<std::size_t>& f);

}  // namespace ue
