#include "generate.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

namespace ue {

namespace {

using nlohmann::json;

FiniteMetricSpace from_points_1d(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::abs(x[i] - x[j]);
      d[i * n + j] = v;
      d[j * n + i] = v;
    }
  return FiniteMetricSpace(n, std::move(d));
}

FiniteMetricSpace from_coords(const std::vector<std::vector<double>>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < pts[i].size(); ++c) {
        const double diff = pts[i][c] - pts[j][c];
        s += diff * diff;
      }
      const double v = std::sqrt(s);
      d[i * n + j] = v;
      d[j * n + i] = v;
    }
  return FiniteMetricSpace(n, std::move(d));
}

}  // namespace

PointStream generate_stream(const std::string& config_json) {
  json cfg;
  try {
    cfg = json::parse(config_json);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadJson, std::string("bad generator config: ") +
                                        e.what());
  }
  if (!cfg.contains("kind"))
    throw Error(ErrorCode::InvalidArgument, "generator config needs a kind");
  const std::string kind = cfg["kind"].get<std::string>();
  const std::size_t n = cfg.value("n", 0);
  const std::uint64_t seed = cfg.value("seed", 0);
  std::mt19937_64 rng(seed);

  if (kind == "powers") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "powers: n >= 1");
    const double base = cfg.value("base", 10.0);
    if (!(base > 1.0))
      throw Error(ErrorCode::InvalidArgument, "powers: base must exceed 1");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = std::pow(base, static_cast<double>(i + 1));
    if (!std::isfinite(x.back()))
      throw Error(ErrorCode::InvalidArgument,
                  "powers: base^n overflows double precision");
    return PointStream::from_matrix(from_points_1d(x));
  }

  if (kind == "harmonic") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "harmonic: n >= 1");
    const double exponent = cfg.value("exponent", 1.0);
    const bool with_limit = cfg.value("with_limit", false);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = 1.0 / std::pow(static_cast<double>(i + 1), exponent);
    std::optional<std::size_t> limit;
    if (with_limit) {
      x.push_back(0.0);
      limit = x.size() - 1;
    }
    return PointStream::from_matrix(from_points_1d(x), limit);
  }

  if (kind == "sphere") {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "sphere: n >= 2");
    const std::size_t dim = cfg.value("dim", std::size_t{3});
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim, 0.0));
    if (dim >= n) {
      // Orthonormal frame: exactly equilateral at sqrt(2).
      for (std::size_t i = 0; i < n; ++i) pts[i][i] = 1.0;
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (auto& p : pts) {
        double norm = 0.0;
        do {
          norm = 0.0;
          for (auto& c : p) {
            c = gauss(rng);
            norm += c * c;
          }
        } while (norm == 0.0);
        norm = std::sqrt(norm);
        for (auto& c : p) c /= norm;
      }
    }
    return PointStream::from_matrix(from_coords(pts));
  }

  if (kind == "grid") {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "grid: n >= 2");
    const double step = cfg.value("step", 1.0);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = step * static_cast<double>(i);
    return PointStream::from_matrix(from_points_1d(x));
  }

  if (kind == "two_clusters") {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "two_clusters: n >= 2");
    const std::size_t clusters = cfg.value("clusters", std::size_t{2});
    if (clusters < 2 || clusters > n)
      throw Error(ErrorCode::InvalidArgument, "two_clusters: bad cluster count");
    std::vector<double> intra;
    if (cfg.contains("intra") && cfg["intra"].is_array())
      intra = cfg["intra"].get<std::vector<double>>();
    else
      intra.assign(1, cfg.value("intra", 0.01));
    const double cross = cfg.value("cross", 1.0);
    const double jitter = cfg.value("cross_jitter", 0.0);
    std::vector<std::size_t> cluster_of(n);
    for (std::size_t i = 0; i < n; ++i) cluster_of[i] = i % clusters;
    std::uniform_real_distribution<double> unif(-jitter, jitter);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double v;
        if (cluster_of[i] == cluster_of[j])
          v = intra[cluster_of[i] % intra.size()];
        else
          v = cross + unif(rng);
        d[i * n + j] = v;
        d[j * n + i] = v;
      }
    return PointStream::from_matrix(FiniteMetricSpace(n, std::move(d)));
  }

  if (kind == "custom_matrix") {
    std::vector<double> d;
    std::size_t size = n;
    if (cfg.contains("d")) {
      d = cfg["d"].get<std::vector<double>>();
      if (size == 0) size = static_cast<std::size_t>(std::lround(std::sqrt(
                         static_cast<double>(d.size()))));
      if (d.size() != size * size)
        throw Error(ErrorCode::InvalidArgument, "custom_matrix: d is not n*n");
    } else if (cfg.contains("upper")) {
      const auto upper = cfg["upper"].get<std::vector<double>>();
      if (size == 0 || upper.size() != size * (size - 1) / 2)
        throw Error(ErrorCode::InvalidArgument,
                    "custom_matrix: upper triangle size mismatch");
      d.assign(size * size, 0.0);
      std::size_t t = 0;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j, ++t) {
          d[i * size + j] = upper[t];
          d[j * size + i] = upper[t];
        }
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "custom_matrix: needs d or upper");
    }
    std::optional<std::size_t> limit;
    if (cfg.contains("limit_index"))
      limit = cfg["limit_index"].get<std::size_t>();
    return PointStream::from_matrix(FiniteMetricSpace(size, std::move(d)),
                                    limit);
  }

  throw Error(ErrorCode::InvalidArgument, "unknown generator kind: " + kind);
}

}  // namespace ue
