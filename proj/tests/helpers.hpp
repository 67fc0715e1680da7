// Shared test fixtures and independent reference implementations. Everything
// here is deliberately naive: these are the oracles the library is checked
// against, so they must not share code with src/.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "metric.hpp"

namespace test_oracle {

inline ue::FiniteMetricSpace from_upper(std::size_t n,
                                        const std::vector<double>& upper) {
  std::vector<double> d(n * n, 0.0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++t) {
      d[i * n + j] = upper[t];
      d[j * n + i] = upper[t];
    }
  return ue::FiniteMetricSpace(n, std::move(d));
}

inline ue::FiniteMetricSpace line_points(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::fabs(x[i] - x[j]);
  return ue::FiniteMetricSpace(n, std::move(d));
}

// Minimax path distances by the Floyd-Warshall recurrence
// u[i][j] = min_k max(u[i][k], u[k][j]); independent of the single-linkage
// construction used by the library.
inline std::vector<double> brute_minimax(const ue::FiniteMetricSpace& m) {
  const std::size_t n = m.size();
  std::vector<double> u(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i * n + j] = m(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        u[i * n + j] = std::min(u[i * n + j],
                                std::max(u[i * n + k], u[k * n + j]));
  return u;
}

// Exhaustive optimum over all merge-tree ultrametrics with heights drawn from
// the input distance set. Recursion over hierarchies: at each step merge two
// clusters at some candidate height >= both clusters' creation heights, then
// score max d/u over the induced matrix. Prunes when the partial objective
// already exceeds the incumbent.
struct TreeEnumerator {
  const ue::FiniteMetricSpace& m;
  std::vector<double> heights;  // sorted distinct candidate heights
  double best = std::numeric_limits<double>::infinity();

  explicit TreeEnumerator(const ue::FiniteMetricSpace& space) : m(space) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        heights.push_back(m(i, j));
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  }

  struct Cluster {
    std::vector<std::size_t> pts;
    double height = 0.0;  // creation height (merge level)
  };

  // Distortion has a free scale, so we track the running max and min of the
  // ratios d(x,y)/h over all already-fixed pairs; the objective is max/min.
  void recurse(std::vector<Cluster> cl, double max_ratio, double min_ratio) {
    if (cl.size() == 1) {
      best = std::min(best, max_ratio / min_ratio);
      return;
    }
    for (std::size_t a = 0; a < cl.size(); ++a)
      for (std::size_t b = a + 1; b < cl.size(); ++b)
        for (double h : heights) {
          if (h < cl[a].height || h < cl[b].height) continue;
          double hi = max_ratio, lo = min_ratio;
          for (auto x : cl[a].pts)
            for (auto y : cl[b].pts) {
              const double r = m(x, y) / h;
              hi = std::max(hi, r);
              lo = std::min(lo, r);
            }
          if (hi / lo >= best) continue;
          std::vector<Cluster> next;
          for (std::size_t t = 0; t < cl.size(); ++t)
            if (t != a && t != b) next.push_back(cl[t]);
          Cluster merged;
          merged.pts = cl[a].pts;
          merged.pts.insert(merged.pts.end(), cl[b].pts.begin(),
                            cl[b].pts.end());
          merged.height = h;
          next.push_back(std::move(merged));
          recurse(std::move(next), hi, lo);
        }
  }
};

// Exhaustive optimum. An `incumbent` seeds the branch-and-bound: the search
// then reports the incumbent itself unless some tree is strictly better, so
// callers can use it to test "nothing beats this value" cheaply.
inline double brute_tree_optimum(
    const ue::FiniteMetricSpace& m,
    double incumbent = std::numeric_limits<double>::infinity()) {
  if (m.size() < 2) return 1.0;
  TreeEnumerator e(m);
  e.best = incumbent;
  std::vector<TreeEnumerator::Cluster> cl(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) cl[i].pts = {i};
  e.recurse(std::move(cl), 0.0, std::numeric_limits<double>::infinity());
  return e.best;
}

// Random valid metric with integer distances from {1..5}: rejection-free
// mutation walk from the all-3 matrix, keeping only mutations that preserve
// every triangle inequality.
inline ue::FiniteMetricSpace random_int_metric(std::size_t n,
                                               std::mt19937_64& rng,
                                               std::size_t mutations = 64) {
  std::vector<double> d(n * n, 3.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> val(1, 5);
  auto triangle_ok = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      if (d[i * n + j] > d[i * n + k] + d[k * n + j]) return false;
      if (d[i * n + k] > d[i * n + j] + d[j * n + k]) return false;
      if (d[j * n + k] > d[j * n + i] + d[i * n + k]) return false;
    }
    return true;
  };
  for (std::size_t t = 0; t < mutations; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const double old = d[i * n + j];
    d[i * n + j] = d[j * n + i] = static_cast<double>(val(rng));
    if (n > 2 && !triangle_ok(i, j)) d[i * n + j] = d[j * n + i] = old;
  }
  return ue::FiniteMetricSpace(n, std::move(d));
}

// Random exact ultrametric via a random recursive partition with shrinking
// integer-free heights.
inline ue::FiniteMetricSpace random_ultrametric(std::size_t n,
                                                std::mt19937_64& rng) {
  std::vector<double> d(n * n, 0.0);
  std::uniform_real_distribution<double> unif(0.5, 1.0);
  // assign each point a random leaf path in a binary hierarchy of depth ~log n
  std::function<void(std::vector<std::size_t>, double)> split =
      [&](std::vector<std::size_t> pts, double h) {
        if (pts.size() < 2) return;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::uniform_int_distribution<std::size_t> cut(1, pts.size() - 1);
        const std::size_t c = cut(rng);
        std::vector<std::size_t> a(pts.begin(), pts.begin() + c);
        std::vector<std::size_t> b(pts.begin() + c, pts.end());
        for (auto x : a)
          for (auto y : b) {
            d[x * n + y] = h;
            d[y * n + x] = h;
          }
        split(std::move(a), h * unif(rng));
        split(std::move(b), h * unif(rng));
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  split(std::move(all), 1.0);
  return ue::FiniteMetricSpace(n, std::move(d));
}

}  // namespace test_oracle
