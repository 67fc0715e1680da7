#include "extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ultra.hpp"

namespace ue {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::Unbounded: return "unbounded";
    case CaseLabel::Equilateral: return "equilateral";
    case CaseLabel::Cauchy: return "cauchy";
    default: return "undecided";
  }
}

CaseLabel case_from_string(const std::string& s) {
  if (s == "unbounded") return CaseLabel::Unbounded;
  if (s == "equilateral") return CaseLabel::Equilateral;
  if (s == "cauchy") return CaseLabel::Cauchy;
  if (s == "undecided") return CaseLabel::Undecided;
  throw Error(ErrorCode::InvalidArgument, "unknown case label: " + s);
}

double gap_threshold(double eps) {
  if (!(eps > 0.0))
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const double a = std::sqrt(1.0 + eps);
  const double b = std::sqrt(1.0 + 0.5 * eps);
  const double t1 = (a - 1.0) / (a * b);
  const double t2 = (a - b) / b;
  const double t3 = (b - 1.0) / 2.0;
  return std::min({t1, t2, t3});
}

static void require_extract_args(double eps, std::size_t target) {
  if (!(eps > 0.0))
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (target < 2)
    throw Error(ErrorCode::InvalidArgument, "target must be at least 2");
}

ExtractionResult extract_unbounded(const PointStream& stream, double eps,
                                   std::size_t target) {
  require_extract_args(eps, target);
  const double theta = gap_threshold(eps);
  ExtractionResult res;
  res.attempted = CaseLabel::Unbounded;
  res.params.theta = theta;
  if (stream.horizon == 0) return res;

  const std::size_t base = 0;
  res.indices.push_back(base);
  res.params.radii.push_back(0.0);
  // Singleton mode keeps only the relative chain R_{k-1} <= theta * R_k; the
  // absolute bound on R_2 exists to dominate block diameters, which vanish.
  for (std::size_t j = base + 1; j < stream.horizon; ++j) {
    if (res.indices.size() >= target) break;
    const double r = stream.dist(j, base);
    if (r <= 0.0) continue;
    if (res.indices.size() >= 2) {
      const double r_prev = res.params.radii.back();
      if (!(r_prev <= theta * r)) continue;
      res.certificate.push_back(
          {"ms3", r_prev, theta * r, theta * r - r_prev, res.indices.back(), j});
    }
    res.indices.push_back(j);
    res.params.radii.push_back(r);
  }
  res.label = res.indices.size() >= target ? CaseLabel::Unbounded
                                           : CaseLabel::Undecided;
  return res;
}

ExtractionResult extract_equilateral(const PointStream& stream, double eps,
                                     std::size_t target) {
  require_extract_args(eps, target);
  ExtractionResult res;
  res.attempted = CaseLabel::Equilateral;
  const std::size_t n = stream.horizon;
  if (n < 2) return res;

  double c1 = std::numeric_limits<double>::infinity();
  double c2 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = stream.dist(i, j);
      c1 = std::min(c1, d);
      c2 = std::max(c2, d);
    }
  const double delta = eps * c1 / 2.0;
  // Bin count can dwarf any integer type on wide-spread streams, so bins are
  // keyed by their floored index as a double; only occupancy matters.
  const double m = std::max(1.0, std::ceil((c2 - c1) / delta));
  auto bin_of = [&](double d) {
    return std::min(std::floor((d - c1) / delta), m - 1.0);
  };
  res.params.c1 = c1;
  res.params.c2 = c2;
  res.params.delta = delta;
  res.params.bin_width = delta;
  res.params.bins = m < 1e18 ? static_cast<std::size_t>(m)
                             : std::numeric_limits<std::size_t>::max();

  // Iterated pigeonhole: re-base at the front of the surviving pool each
  // round, keep the most populated distance bin, then take the monochromatic
  // subsequence of basepoints.
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::pair<std::size_t, double>> chain;  // (basepoint, bin)
  while (pool.size() >= 2) {
    const std::size_t b = pool.front();
    std::map<double, std::vector<std::size_t>> by_bin;
    for (std::size_t t = 1; t < pool.size(); ++t)
      by_bin[bin_of(stream.dist(b, pool[t]))].push_back(pool[t]);
    double best_bin = 0;
    std::size_t best_count = 0;
    for (const auto& [bin, members] : by_bin)
      if (members.size() > best_count) {
        best_bin = bin;
        best_count = members.size();
      }
    chain.emplace_back(b, best_bin);
    pool = by_bin[best_bin];
  }

  std::map<double, std::size_t> color_count;
  for (const auto& [b, color] : chain) ++color_count[color];
  double best_color = 0;
  std::size_t best = 0;
  for (const auto& [color, count] : color_count)
    if (count > best) {
      best = count;
      best_color = color;
    }
  std::vector<std::size_t> selected;
  for (const auto& [b, color] : chain)
    if (color == best_color) selected.push_back(b);
  // The survivor of the final pool lies in bin best_color of every selected
  // basepoint, so it extends the monochromatic set by one.
  if (!pool.empty()) selected.push_back(pool.front());

  const double alpha = c1 + best_color * delta;
  res.params.alpha = alpha;
  res.params.radii.assign(selected.size(), alpha);
  res.indices = selected;

  const bool full_cert = selected.size() <= 64;
  CertEntry worst_lo, worst_hi;
  double min_lo = std::numeric_limits<double>::infinity();
  double min_hi = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < selected.size(); ++a)
    for (std::size_t b2 = a + 1; b2 < selected.size(); ++b2) {
      const double d = stream.dist(selected[a], selected[b2]);
      CertEntry lo{"add1_lower", alpha, d, d - alpha, selected[a], selected[b2]};
      CertEntry hi{"add1_upper", d, (1.0 + eps) * alpha,
                   (1.0 + eps) * alpha - d, selected[a], selected[b2]};
      if (full_cert) {
        res.certificate.push_back(lo);
        res.certificate.push_back(hi);
      } else {
        if (lo.margin < min_lo) { min_lo = lo.margin; worst_lo = lo; }
        if (hi.margin < min_hi) { min_hi = hi.margin; worst_hi = hi; }
      }
    }
  if (!full_cert && selected.size() >= 2) {
    res.certificate.push_back(worst_lo);
    res.certificate.push_back(worst_hi);
  }

  res.label = selected.size() >= target ? CaseLabel::Equilateral
                                        : CaseLabel::Undecided;
  return res;
}

std::size_t cauchy_limit_proxy(const PointStream& stream) {
  if (stream.limit_index) return *stream.limit_index;
  const std::size_t n = stream.horizon;
  const std::size_t tail_start = (3 * n) / 4;
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < n; ++p) {
    double worst = 0.0;
    for (std::size_t q = tail_start; q < n; ++q) {
      if (q == p) continue;
      worst = std::max(worst, stream.dist(p, q));
    }
    if (worst < best_val) {
      best_val = worst;
      best = p;
    }
  }
  return best;
}

ExtractionResult extract_cauchy(const PointStream& stream, double eps,
                                std::size_t target) {
  require_extract_args(eps, target);
  const double theta = gap_threshold(eps);
  ExtractionResult res;
  res.attempted = CaseLabel::Cauchy;
  res.params.theta = theta;
  res.params.delta = theta;
  if (stream.horizon == 0) return res;

  const std::size_t limit = cauchy_limit_proxy(stream);
  for (std::size_t j = 0; j < stream.horizon; ++j) {
    if (res.indices.size() >= target) break;
    if (j == limit) continue;
    const double s = stream.dist(j, limit);
    if (s <= 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  "limit proxy coincides with a stream point");
    if (!res.indices.empty()) {
      const double s_prev = res.params.radii.back();
      if (!(s < s_prev && s <= theta * s_prev)) continue;
      res.certificate.push_back(
          {"cauchy_ratio", s, theta * s_prev, theta * s_prev - s,
           res.indices.back(), j});
    }
    res.indices.push_back(j);
    res.params.radii.push_back(s);
  }
  res.label = res.indices.size() >= target ? CaseLabel::Cauchy
                                           : CaseLabel::Undecided;
  return res;
}

ExtractionResult extract(const PointStream& stream, double eps,
                         std::size_t target) {
  ExtractionResult candidates[3] = {extract_unbounded(stream, eps, target),
                                    extract_equilateral(stream, eps, target),
                                    extract_cauchy(stream, eps, target)};
  const ExtractionResult* best = nullptr;
  for (const auto& c : candidates) {
    if (!c.decided()) continue;
    if (!best || c.indices.size() > best->indices.size()) best = &c;
  }
  if (best) return *best;
  for (const auto& c : candidates)
    if (!best || c.indices.size() > best->indices.size()) best = &c;
  return *best;
}

BlockFamily block_partition(const FiniteMetricSpace& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k < 1 || n < k)
    throw Error(ErrorCode::InvalidArgument,
                "cannot produce k nonempty disjoint blocks");
  const double diam = m.diameter();
  BlockFamily fam;
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  for (std::size_t b = 1; b <= k; ++b) {
    double cap = diam / static_cast<double>(b);
    if (!fam.diameters.empty()) cap = std::min(cap, fam.diameters.back());
    const std::size_t reserve = k - b;

    // Candidate blocks are single-linkage clusters of the remaining points;
    // take the largest whose diameter fits under the cap and which leaves
    // enough points for the blocks still to come.
    FiniteMetricSpace sub = m.restrict(remaining);
    LevelTree tree = subdominant_ultrametric(sub).tree;
    std::vector<std::vector<std::size_t>> node_leaves(tree.nodes.size());
    for (std::size_t i = 0; i < sub.size(); ++i) node_leaves[i] = {i};
    for (std::size_t v = sub.size(); v < tree.nodes.size(); ++v) {
      node_leaves[v] = node_leaves[tree.nodes[v].left];
      node_leaves[v].insert(node_leaves[v].end(),
                            node_leaves[tree.nodes[v].right].begin(),
                            node_leaves[tree.nodes[v].right].end());
    }
    auto diam_of = [&](const std::vector<std::size_t>& s) {
      double d = 0.0;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t c = a + 1; c < s.size(); ++c)
          d = std::max(d, sub(s[a], s[c]));
      return d;
    };
    std::size_t best_node = 0;
    std::size_t best_size = 0;
    double best_diam = 0.0;
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
      const auto& s = node_leaves[v];
      if (s.size() <= best_size) continue;
      if (remaining.size() - s.size() < reserve) continue;
      const double d = diam_of(s);
      if (d <= cap) {
        best_node = v;
        best_size = s.size();
        best_diam = d;
      }
    }
    std::vector<std::size_t> block;
    for (auto li : node_leaves[best_node]) block.push_back(remaining[li]);
    std::sort(block.begin(), block.end());
    fam.blocks.push_back(block);
    fam.diameters.push_back(best_diam);

    std::vector<std::size_t> next;
    for (auto idx : remaining)
      if (std::find(block.begin(), block.end(), idx) == block.end())
        next.push_back(idx);
    remaining = std::move(next);
  }
  return fam;
}

}  // namespace ue
