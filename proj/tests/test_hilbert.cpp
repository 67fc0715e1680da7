#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "hilbert.hpp"

using namespace ue;

namespace {

double coord_dist(const CoordinateEmbedding& e, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t c = 0; c < e.dim; ++c) {
    const double diff = e.coords[a * e.dim + c] - e.coords[b * e.dim + c];
    s += diff * diff;
  }
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("two points at distance c: Gram is diag(0, c^2)") {
  auto m = test_oracle::from_upper(2, {3.0});
  auto u = ultra_from_matrix(m);
  auto g = gram_from_ultrametric(u, 0);
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.0);
  CHECK(g[2] == 0.0);
  CHECK(g[3] == 9.0);
}

TEST_CASE("equilateral triangle Gram: off-diagonal 1/2, eigenvalues 3/2, 1/2") {
  auto m = test_oracle::from_upper(3, {1, 1, 1});
  auto u = ultra_from_matrix(m);
  double min_eig = 0.0;
  auto g = gram_from_ultrametric(u, 0, &min_eig);
  CHECK(g[1 * 3 + 2] == doctest::Approx(0.5));
  CHECK(g[1 * 3 + 1] == doctest::Approx(1.0));
  CHECK(g[2 * 3 + 2] == doctest::Approx(1.0));
  // non-basepoint block [[1, 1/2], [1/2, 1]] has eigenvalues 3/2 and 1/2;
  // the full matrix adds a zero from the basepoint row
  CHECK(min_eig >= -1e-12);
}

TEST_CASE("random single-linkage ultrametrics are PSD") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 10; ++t) {
    auto m = test_oracle::random_int_metric(12, rng);
    auto u = subdominant_ultrametric(m);
    double min_eig = 0.0;
    CHECK_NOTHROW(gram_from_ultrametric(u, 0, &min_eig));
    CHECK(min_eig >= -1e-9 * 25.0);
  }
}

TEST_CASE("two points: coordinates {0, c} on a line") {
  auto m = test_oracle::from_upper(2, {4.0});
  auto e = coordinates(ultra_from_matrix(m));
  CHECK(e.dim == 1);
  CHECK(coord_dist(e, 0, 1) == doctest::Approx(4.0));
}

TEST_CASE("equilateral points embed as a regular simplex") {
  auto m = test_oracle::from_upper(5, std::vector<double>(10, 1.0));
  auto e = coordinates(ultra_from_matrix(m));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      CHECK(coord_dist(e, i, j) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.dim <= 4);
}

TEST_CASE("reconstruction holds to 1e-12 on tree round-trips, n <= 20") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 10; ++t) {
    auto m = test_oracle::random_ultrametric(20, rng);
    auto u = ultra_from_matrix(tree_from_matrix(m).to_matrix());
    auto e = coordinates(u);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = i + 1; j < 20; ++j)
        CHECK(std::fabs(coord_dist(e, i, j) - m(i, j)) <= 1e-12 * m(i, j));
    CHECK(e.max_reconstruction_error <= 1e-9);
  }
}

TEST_CASE("basepoint choice changes coordinates but not distances") {
  std::mt19937_64 rng(73);
  auto m = test_oracle::random_ultrametric(9, rng);
  auto u = ultra_from_matrix(m);
  auto a = coordinates(u, 0);
  auto b = coordinates(u, 5);
  std::vector<double> da, db;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) {
      da.push_back(coord_dist(a, i, j));
      db.push_back(coord_dist(b, i, j));
    }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  for (std::size_t k = 0; k < da.size(); ++k)
    CHECK(da[k] == doctest::Approx(db[k]).epsilon(1e-9));
}

TEST_CASE("the collinear negative control is refused") {
  auto m = test_oracle::from_upper(3, {1, 2, 1});
  CHECK_THROWS_AS(ultra_from_matrix(m), Error);
}
