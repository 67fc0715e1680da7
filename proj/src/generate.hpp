#pragma once

#include <string>

#include "stream.hpp"

namespace ue {

/// Builds a reproducible synthetic stream from a JSON generator config:
///   {"kind": "powers"|"harmonic"|"sphere"|"grid"|"two_clusters"|
///            "custom_matrix", "n": int, "seed": int, ...}
/// Parameters per kind:
///   powers:       base (default 10); points base^1..base^n on the line
///   harmonic:     exponent (default 1), with_limit (default false);
///                 points 1/i^exponent, plus the limit 0 as a designated
///                 final point when with_limit is set
///   sphere:       dim; unit vectors, an orthonormal frame when dim >= n
///   grid:         step (default 1); uniform grid on a segment
///   two_clusters: clusters (default 2), intra (per-cluster distance, scalar
///                 or array), cross (default 1), cross_jitter (default 0)
///   custom_matrix: d (row-major n*n array) or upper (upper triangle)
PointStream generate_stream(const std::string& config_json);

}  // namespace ue
