#pragma once

#include <cstddef>
#include <vector>

#include "extract.hpp"
#include "ultra.hpp"

namespace ue {

/// A subset A_i with basepoint, an internal ultrametric embedding of
/// certified distortion, and an apex radius.
struct Block {
  std::vector<std::size_t> indices;   // ambient point indices
  std::size_t basepoint = 0;          // ambient index, member of `indices`
  FiniteMetricSpace internal_rho;     // image distances, aligned with indices
  double internal_distortion = 1.0;   // certified d <= rho <= D0 * d
  double apex_radius = 0.0;
};

/// Block image plus one apex point at constant distance `radius`; the apex
/// is the last point of `base`.
struct ApexSpace {
  UltraSpace base;
  double radius = 0.0;
  std::vector<std::size_t> ambient;  // ambient indices of the non-apex points
};

/// Finite-support sup-product over apex spaces, materialized on the image
/// tuples only (each tuple is all-apex except one coordinate).
struct ProductUltra {
  FiniteMetricSpace rho;
  std::vector<std::size_t> factor_of;   // factor index per materialized point
  std::vector<std::size_t> point_of;    // point index within its factor
  std::vector<std::size_t> ambient;     // ambient index per materialized point
};

struct PairRow {
  std::size_t i = 0, j = 0;  // ambient indices
  double d = 0.0;            // ambient distance
  double rho = 0.0;          // product distance
  double ratio = 0.0;        // rho / d
};

struct EmbeddingReport {
  DistortionReport dist;
  CaseLabel label = CaseLabel::Undecided;
  bool block_mode = false;
  double bound = 0.0;         // asserted distortion bound (1+eps or 2+eps)
  double global_scale = 1.0;  // pre-scale applied in block mode
  std::vector<std::size_t> image;  // embedded ambient indices, block 1 consumed
  std::vector<PairRow> pairs;
  std::vector<CertEntry> certificate;
  ProductUltra product;
};

ApexSpace make_apex(const Block& block);

ProductUltra product_sup(const std::vector<ApexSpace>& factors);
ProductUltra product_sup(
    const std::vector<ApexSpace>& factors,
    const std::vector<std::pair<std::size_t, std::size_t>>& support);

/// Singleton blocks from a certified extraction: block k = {i_k} with the
/// case radius (R_k, alpha, or s_k).
std::vector<Block> blocks_from_extraction(const ExtractionResult& extraction,
                                          const PointStream& stream);

/// Block-mode preparation: internal embeddings are subdominant fits scaled to
/// satisfy d <= rho <= D0 * d; rejects blocks whose fit exceeds 2+eps.
/// Radii come from the near-equilateral certificate when the cross distances
/// admit one, else from the basepoint-distance chain after a global rescale.
std::vector<Block> plan_blocks(const FiniteMetricSpace& m,
                               const std::vector<std::vector<std::size_t>>& sets,
                               double eps, CaseLabel* label_out,
                               double* global_scale_out);

/// The product-space embedding of everything past block 1, with its full
/// distortion report. Throws Error(BoundViolation) if the verified distortion
/// exceeds 1+eps (singleton) or 2+eps (block mode).
EmbeddingReport embed(const std::vector<Block>& blocks,
                      const FiniteMetricSpace& ambient, double eps,
                      bool block_mode, CaseLabel label,
                      double global_scale = 1.0);

/// Pairwise two-sided bound rho/sqrt(1+eps) <= d <= sqrt(1+eps)*rho for the
/// unbounded and Cauchy chains (radii R_i or s_i).
std::vector<CertEntry> verify_case1_bounds(const std::vector<Block>& blocks,
                                           const FiniteMetricSpace& ambient,
                                           double eps,
                                           double global_scale = 1.0);

}  // namespace ue
