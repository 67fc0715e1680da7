#pragma once

#include <cstddef>
#include <vector>

#include "ultra.hpp"

namespace ue {

struct CoordinateEmbedding {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> coords;  // row-major n x dim, basepoint at the origin
  std::size_t basepoint = 0;
  std::vector<double> gram;    // n x n inner-product matrix
  double min_eigenvalue = 0.0;
  double max_reconstruction_error = 0.0;  // relative, over all pairs
};

/// Gram matrix G[x][y] = (rho(x,b)^2 + rho(y,b)^2 - rho(x,y)^2) / 2 for an
/// exact ultrametric. Throws Error(BoundViolation) if an eigenvalue falls
/// below -tol_scale * max|G|.
std::vector<double> gram_from_ultrametric(const UltraSpace& u,
                                          std::size_t basepoint,
                                          double* min_eigenvalue = nullptr,
                                          double tol_scale = 1e-9);

/// Explicit isometric coordinates for a finite ultrametric: eigenfactorization
/// of the Gram matrix with negative eigenvalues clamped at zero. Pairwise
/// Euclidean distances are verified against rho within 1e-9 relative error.
CoordinateEmbedding coordinates(const UltraSpace& u, std::size_t basepoint = 0);

}  // namespace ue
