#include "hilbert.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ue {

namespace {

void require_ultrametric(const FiniteMetricSpace& m) {
  TripleWitness w;
  if (!is_ultrametric(m, 0.0, &w)) {
    std::ostringstream os;
    os << "input is not ultrametric: triple (" << w.i << "," << w.j << ","
       << w.k << ") slack " << w.slack;
    throw Error(ErrorCode::NotUltrametric, os.str());
  }
}

}  // namespace

std::vector<double> gram_from_ultrametric(const UltraSpace& u,
                                          std::size_t basepoint,
                                          double* min_eigenvalue,
                                          double tol_scale) {
  const FiniteMetricSpace& rho = u.base;
  require_ultrametric(rho);
  const std::size_t n = rho.size();
  if (basepoint >= n)
    throw Error(ErrorCode::InvalidArgument, "basepoint out of range");
  Eigen::MatrixXd g(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double rx = rho(x, basepoint);
      const double ry = rho(y, basepoint);
      g(x, y) = 0.5 * (rx * rx + ry * ry - rho(x, y) * rho(x, y));
    }
  const double norm = g.cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g,
                                                        Eigen::EigenvaluesOnly);
  const double lambda_min = solver.eigenvalues().minCoeff();
  if (min_eigenvalue) *min_eigenvalue = lambda_min;
  if (lambda_min < -tol_scale * norm) {
    std::ostringstream os;
    os << "Gram matrix is not positive semidefinite: min eigenvalue "
       << lambda_min << " with scale " << norm;
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  std::vector<double> out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x * n + y] = g(x, y);
  return out;
}

CoordinateEmbedding coordinates(const UltraSpace& u, std::size_t basepoint) {
  const FiniteMetricSpace& rho = u.base;
  const std::size_t n = rho.size();
  CoordinateEmbedding emb;
  emb.n = n;
  emb.basepoint = basepoint;
  emb.gram = gram_from_ultrametric(u, basepoint, &emb.min_eigenvalue);

  Eigen::MatrixXd g(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g(x, y) = emb.gram[x * n + y];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  const Eigen::VectorXd vals = solver.eigenvalues();
  const Eigen::MatrixXd vecs = solver.eigenvectors();
  const double norm = g.cwiseAbs().maxCoeff();
  const double rank_tol = 1e-12 * std::max(norm, 1.0);

  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (vals(k) > rank_tol) keep.push_back(k);
  // Largest eigenvalue first keeps coordinate order stable across runs.
  std::reverse(keep.begin(), keep.end());

  emb.dim = keep.size();
  emb.coords.assign(n * emb.dim, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < emb.dim; ++c)
      emb.coords[x * emb.dim + c] =
          vecs(x, keep[c]) * std::sqrt(std::max(0.0, vals(keep[c])));

  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      double s = 0.0;
      for (std::size_t c = 0; c < emb.dim; ++c) {
        const double diff =
            emb.coords[x * emb.dim + c] - emb.coords[y * emb.dim + c];
        s += diff * diff;
      }
      const double err = std::abs(std::sqrt(s) - rho(x, y)) / rho(x, y);
      worst = std::max(worst, err);
    }
  emb.max_reconstruction_error = worst;
  if (worst > 1e-9) {
    std::ostringstream os;
    os << "coordinate reconstruction error " << worst
       << " exceeds 1e-9 relative tolerance";
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  return emb;
}

}  // namespace ue
