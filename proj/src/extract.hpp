#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stream.hpp"

namespace ue {

enum class CaseLabel { Unbounded, Equilateral, Cauchy, Undecided };

std::string to_string(CaseLabel c);
CaseLabel case_from_string(const std::string& s);

/// One verified inequality lhs <= rhs with its margin (rhs - lhs).
struct CertEntry {
  std::string kind;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::size_t i = 0, j = 0;  // participating stream indices
};

struct CaseParams {
  double theta = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double bin_width = 0.0;
  std::size_t bins = 0;
  std::vector<double> radii;  // R_k, alpha, or s_k aligned with indices
};

struct ExtractionResult {
  std::vector<std::size_t> indices;  // strictly increasing stream indices
  CaseLabel label = CaseLabel::Undecided;
  CaseLabel attempted = CaseLabel::Undecided;  // which procedure produced this
  CaseParams params;
  std::vector<CertEntry> certificate;

  bool decided() const { return label != CaseLabel::Undecided; }
};

/// theta(eps): the geometric-gap threshold used by the unbounded and Cauchy
/// procedures; minimum of three closed-form terms in sqrt(1+eps) and
/// sqrt(1+eps/2).
double gap_threshold(double eps);

ExtractionResult extract_unbounded(const PointStream& stream, double eps,
                                   std::size_t target);
ExtractionResult extract_equilateral(const PointStream& stream, double eps,
                                     std::size_t target);
ExtractionResult extract_cauchy(const PointStream& stream, double eps,
                                std::size_t target);

/// Limit proxy used by the Cauchy procedure: the designated limit index if
/// present, else the point minimizing the max distance to the final quarter
/// of the stream.
std::size_t cauchy_limit_proxy(const PointStream& stream);

/// Runs all three procedures and keeps the one with the most indices; ties
/// broken by case order Unbounded < Equilateral < Cauchy.
ExtractionResult extract(const PointStream& stream, double eps,
                         std::size_t target);

struct BlockFamily {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<double> diameters;
};

/// k pairwise-disjoint blocks with diam(K_i) <= diam(M)/i, sizes maximized
/// greedily over single-linkage clusters while leaving room for the blocks
/// still to come.
BlockFamily block_partition(const FiniteMetricSpace& m, std::size_t k);

}  // namespace ue
