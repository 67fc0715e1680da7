#include "builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ue {

namespace {

double matrix_diameter(const FiniteMetricSpace& m) { return m.diameter(); }

FiniteMetricSpace scaled(const FiniteMetricSpace& m, double s) {
  std::vector<double> d = m.dense();
  for (auto& v : d) v *= s;
  return FiniteMetricSpace(m.size(), std::move(d), m.labels());
}

double set_distance(const FiniteMetricSpace& m,
                    const std::vector<std::size_t>& a,
                    const std::vector<std::size_t>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (auto x : a)
    for (auto y : b) best = std::min(best, m(x, y));
  return best;
}

}  // namespace

ApexSpace make_apex(const Block& block) {
  const std::size_t m = block.indices.size();
  if (block.internal_rho.size() != m)
    throw Error(ErrorCode::InvalidArgument,
                "internal embedding size does not match block");
  if (!(block.apex_radius > 0.0))
    throw Error(ErrorCode::InvalidArgument, "apex radius must be positive");
  const double diam = matrix_diameter(block.internal_rho);
  if (diam > block.apex_radius) {
    std::ostringstream os;
    os << "block image diameter " << diam << " exceeds apex radius "
       << block.apex_radius;
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  std::vector<double> d((m + 1) * (m + 1), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d[i * (m + 1) + j] = block.internal_rho(i, j);
    d[i * (m + 1) + m] = block.apex_radius;
    d[m * (m + 1) + i] = block.apex_radius;
  }
  ApexSpace apex;
  apex.base = ultra_from_matrix(FiniteMetricSpace(m + 1, std::move(d)));
  apex.radius = block.apex_radius;
  apex.ambient = block.indices;
  return apex;
}

ProductUltra product_sup(const std::vector<ApexSpace>& factors,
                         const std::vector<std::pair<std::size_t, std::size_t>>&
                             support) {
  if (factors.empty())
    throw Error(ErrorCode::InvalidArgument, "empty factor list");
  std::vector<std::pair<std::size_t, std::size_t>> pts = support;
  if (pts.empty()) {
    for (std::size_t f = 0; f < factors.size(); ++f)
      for (std::size_t p = 0; p + 1 < factors[f].base.base.size(); ++p)
        pts.emplace_back(f, p);
  } else {
    for (const auto& [f, p] : pts) {
      if (f >= factors.size() || p + 1 >= factors[f].base.base.size())
        throw Error(ErrorCode::InvalidArgument,
                    "support entry must name a non-apex point of its factor");
    }
  }
  const std::size_t n = pts.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto [fa, pa] = pts[a];
      const auto [fb, pb] = pts[b];
      // Coordinatewise sup: tuples differ in at most two coordinates, and the
      // apex rows are constant, so the sup collapses to this law.
      const double v = fa == fb ? factors[fa].base.base(pa, pb)
                                : std::max(factors[fa].radius, factors[fb].radius);
      d[a * n + b] = v;
      d[b * n + a] = v;
    }
  ProductUltra prod;
  prod.rho = FiniteMetricSpace(n, std::move(d));
  TripleWitness w;
  if (!is_ultrametric(prod.rho, 0.0, &w))
    throw Error(ErrorCode::NotUltrametric,
                "sup-product failed the exact ultrametric check");
  for (const auto& [f, p] : pts) {
    prod.factor_of.push_back(f);
    prod.point_of.push_back(p);
    prod.ambient.push_back(factors[f].ambient[p]);
  }
  return prod;
}

ProductUltra product_sup(const std::vector<ApexSpace>& factors) {
  return product_sup(factors, {});
}

std::vector<Block> blocks_from_extraction(const ExtractionResult& extraction,
                                          const PointStream& stream) {
  (void)stream;
  if (extraction.indices.size() < 2)
    throw Error(ErrorCode::InvalidArgument,
                "extraction must select at least two indices");
  if (extraction.params.radii.size() != extraction.indices.size())
    throw Error(ErrorCode::InvalidArgument, "extraction radii missing");
  std::vector<Block> blocks;
  blocks.reserve(extraction.indices.size());
  for (std::size_t k = 0; k < extraction.indices.size(); ++k) {
    Block b;
    b.indices = {extraction.indices[k]};
    b.basepoint = extraction.indices[k];
    b.internal_rho = FiniteMetricSpace(1, {0.0});
    b.internal_distortion = 1.0;
    b.apex_radius = extraction.params.radii[k];
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::vector<Block> plan_blocks(const FiniteMetricSpace& m,
                               const std::vector<std::vector<std::size_t>>& sets,
                               double eps, CaseLabel* label_out,
                               double* global_scale_out) {
  if (sets.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "need at least two blocks");
  std::vector<Block> blocks;
  for (const auto& set : sets) {
    if (set.empty())
      throw Error(ErrorCode::InvalidArgument, "empty block");
    Block b;
    b.indices = set;
    b.basepoint = *std::min_element(set.begin(), set.end());
    FiniteMetricSpace sub = m.restrict(set);
    if (set.size() == 1) {
      b.internal_rho = FiniteMetricSpace(1, {0.0});
      b.internal_distortion = 1.0;
    } else {
      UltraSpace u = subdominant_ultrametric(sub);
      double d0 = 1.0;
      for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = i + 1; j < sub.size(); ++j)
          d0 = std::max(d0, sub(i, j) / u.base(i, j));
      if (d0 > 2.0 + eps)
        throw Error(ErrorCode::InvalidArgument,
                    "internal subdominant fit exceeds distortion 2+eps");
      b.internal_rho = scaled(u.base, d0);
      b.internal_distortion = d0;
    }
    blocks.push_back(std::move(b));
  }

  if (sets.size() == 2) {
    // A single embedded block has no cross pairs; its apex radius only has to
    // dominate the block diameter.
    blocks[1].apex_radius = std::max(set_distance(m, sets[0], sets[1]),
                                     matrix_diameter(blocks[1].internal_rho));
    if (label_out) *label_out = CaseLabel::Equilateral;
    if (global_scale_out) *global_scale_out = 1.0;
    return blocks;
  }

  // Per-block radii route: choose apex radii r_i so every cross pair lands in
  // [d, (2+eps) d]. The upper constraints decouple (r_i <= (2+eps) min_j m_ij)
  // and the lower ones are pairwise (max(r_i, r_j) >= M_ij), so a greedy raise
  // over pairs in decreasing M order is exact.
  if (sets.size() >= 3) {
    const double big = 2.0 + eps;
    const std::size_t nb = sets.size();
    std::vector<std::vector<double>> mmin(nb, std::vector<double>(nb, 0.0));
    std::vector<std::vector<double>> mmax(nb, std::vector<double>(nb, 0.0));
    std::vector<double> cap(nb, std::numeric_limits<double>::infinity());
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < nb; ++i)
      for (std::size_t j = i + 1; j < nb; ++j) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (auto x : sets[i])
          for (auto y : sets[j]) {
            lo = std::min(lo, m(x, y));
            hi = std::max(hi, m(x, y));
          }
        mmin[i][j] = mmin[j][i] = lo;
        mmax[i][j] = mmax[j][i] = hi;
        cap[i] = std::min(cap[i], big * lo);
        cap[j] = std::min(cap[j], big * lo);
        pairs.emplace_back(hi, i, j);
      }
    std::sort(pairs.rbegin(), pairs.rend());
    std::vector<double> radii(nb, 0.0);
    bool feasible = true;
    for (std::size_t i = 1; i < nb; ++i) {
      radii[i] = matrix_diameter(blocks[i].internal_rho);
      if (radii[i] > cap[i]) feasible = false;
    }
    for (const auto& [need, i, j] : pairs) {
      if (!feasible || std::max(radii[i], radii[j]) >= need) continue;
      const std::size_t pick =
          cap[i] >= need && (cap[i] >= cap[j] || cap[j] < need) ? i : j;
      if (cap[pick] < need) feasible = false;
      else radii[pick] = need;
    }
    if (feasible) {
      for (std::size_t i = 1; i < nb; ++i)
        blocks[i].apex_radius = std::max(radii[i], cap[i] / big);
      if (label_out) *label_out = CaseLabel::Equilateral;
      if (global_scale_out) *global_scale_out = 1.0;
      return blocks;
    }
  }

  // Chain route: basepoint-distance chain with the geometric gap threshold,
  // after rescaling so every block diameter fits under 1/(2+eps).
  const double theta = gap_threshold(eps);
  double max_diam = 0.0;
  for (std::size_t i = 1; i < sets.size(); ++i)
    max_diam = std::max(max_diam, m.restrict(sets[i]).diameter());
  const double sigma =
      max_diam > 0.0 ? 1.0 / ((2.0 + eps) * max_diam) : 1.0;
  std::vector<double> radii(sets.size(), 0.0);
  for (std::size_t i = 1; i < sets.size(); ++i)
    radii[i] = sigma * set_distance(m, sets[i], sets[0]);
  if (max_diam > 0.0 && !(1.0 <= theta * radii[1]))
    throw Error(ErrorCode::Undecided,
                "blocks satisfy neither the near-equilateral nor the chain "
                "gap conditions");
  for (std::size_t i = 2; i < sets.size(); ++i)
    if (!(radii[i - 1] <= theta * radii[i]))
      throw Error(ErrorCode::Undecided,
                  "blocks satisfy neither the near-equilateral nor the chain "
                  "gap conditions");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].internal_rho = scaled(blocks[i].internal_rho, sigma);
    blocks[i].apex_radius = radii[i];
  }
  if (label_out) *label_out = CaseLabel::Unbounded;
  if (global_scale_out) *global_scale_out = sigma;
  return blocks;
}

std::vector<CertEntry> verify_case1_bounds(const std::vector<Block>& blocks,
                                           const FiniteMetricSpace& ambient,
                                           double eps, double global_scale) {
  const double root = std::sqrt(1.0 + eps);
  std::vector<CertEntry> cert;
  for (std::size_t fi = 1; fi < blocks.size(); ++fi)
    for (std::size_t fj = fi + 1; fj < blocks.size(); ++fj) {
      const double rho = std::max(blocks[fi].apex_radius, blocks[fj].apex_radius);
      for (auto x : blocks[fi].indices)
        for (auto y : blocks[fj].indices) {
          const double d = global_scale * ambient(x, y);
          cert.push_back({"case1_lower", rho / root, d, d - rho / root, x, y});
          cert.push_back({"case1_upper", d, root * rho, root * rho - d, x, y});
        }
    }
  return cert;
}

EmbeddingReport embed(const std::vector<Block>& blocks,
                      const FiniteMetricSpace& ambient, double eps,
                      bool block_mode, CaseLabel label, double global_scale) {
  if (blocks.size() < 2)
    throw Error(ErrorCode::InvalidArgument,
                "need a basepoint block plus at least one embedded block");
  std::vector<ApexSpace> factors;
  for (std::size_t i = 1; i < blocks.size(); ++i)
    factors.push_back(make_apex(blocks[i]));

  EmbeddingReport rep;
  rep.label = label;
  rep.block_mode = block_mode;
  rep.global_scale = global_scale;
  rep.bound = block_mode ? 2.0 + eps : 1.0 + eps;
  rep.product = product_sup(factors);
  rep.image = rep.product.ambient;

  FiniteMetricSpace source = ambient.restrict(rep.image);
  std::vector<std::size_t> identity(rep.image.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  rep.dist = distortion(source, rep.product.rho, identity);

  for (std::size_t a = 0; a < rep.image.size(); ++a)
    for (std::size_t b = a + 1; b < rep.image.size(); ++b) {
      PairRow row;
      row.i = rep.image[a];
      row.j = rep.image[b];
      row.d = source(a, b);
      row.rho = rep.product.rho(a, b);
      row.ratio = row.rho / row.d;
      rep.pairs.push_back(row);
    }

  if (label == CaseLabel::Unbounded || label == CaseLabel::Cauchy) {
    auto cert = verify_case1_bounds(blocks, ambient, eps, global_scale);
    rep.certificate.insert(rep.certificate.end(), cert.begin(), cert.end());
  } else if (label == CaseLabel::Equilateral) {
    // Singleton mode certifies a single alpha; block mode may carry distinct
    // apex radii, so it certifies each cross pair against [d, bound * d].
    const double alpha = blocks[1].apex_radius;
    std::size_t row_idx = 0;
    for (std::size_t a = 0; a < rep.image.size(); ++a)
      for (std::size_t b = a + 1; b < rep.image.size(); ++b, ++row_idx) {
        if (rep.product.factor_of[a] == rep.product.factor_of[b]) continue;
        const PairRow& row = rep.pairs[row_idx];
        const double d = global_scale * row.d;
        if (block_mode) {
          rep.certificate.push_back(
              {"cross_lower", d, row.rho, row.rho - d, row.i, row.j});
          rep.certificate.push_back(
              {"cross_upper", row.rho, rep.bound * d, rep.bound * d - row.rho,
               row.i, row.j});
        } else {
          rep.certificate.push_back(
              {"add1_lower", alpha, d, d - alpha, row.i, row.j});
          rep.certificate.push_back(
              {"add1_upper", d, (1.0 + eps) * alpha, (1.0 + eps) * alpha - d,
               row.i, row.j});
        }
      }
  }
  if (block_mode) {
    // (ms1) audit: d <= rho <= D0 * d within each embedded block.
    for (std::size_t f = 1; f < blocks.size(); ++f) {
      const auto& blk = blocks[f];
      for (std::size_t a = 0; a < blk.indices.size(); ++a)
        for (std::size_t b = a + 1; b < blk.indices.size(); ++b) {
          const double d = global_scale * ambient(blk.indices[a], blk.indices[b]);
          const double rho = blk.internal_rho(a, b);
          rep.certificate.push_back(
              {"ms1_lower", d, rho, rho - d, blk.indices[a], blk.indices[b]});
          rep.certificate.push_back({"ms1_upper", rho,
                                     (2.0 + eps) * d, (2.0 + eps) * d - rho,
                                     blk.indices[a], blk.indices[b]});
        }
    }
  }

  if (rep.dist.distortion > rep.bound * (1.0 + 1e-9)) {
    std::ostringstream os;
    os << "verified distortion " << rep.dist.distortion
       << " violates the certified bound " << rep.bound;
    throw Error(ErrorCode::BoundViolation, os.str());
  }
  return rep;
}

}  // namespace ue
