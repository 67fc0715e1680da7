// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check recomputes its expected values independently of
// the library wherever an oracle exists.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "builder.hpp"
#include "extract.hpp"
#include "generate.hpp"
#include "helpers.hpp"
#include "hilbert.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"

using namespace ue;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- 1: singleton pipeline over four generators and three epsilons ----
void criterion1() {
  const std::vector<std::pair<std::string, std::string>> generators = {
      {"powers", R"({"kind":"powers","n":500,"base":2})"},
      {"harmonic-with-limit",
       R"({"kind":"harmonic","n":500,"exponent":8,"with_limit":true})"},
      {"sphere-equilateral", R"({"kind":"sphere","n":500,"dim":500})"},
      {"two_clusters",
       R"({"kind":"two_clusters","n":500,"clusters":2,"intra":0.01,"cross":1.0})"}};
  const double epsilons[] = {0.1, 0.5, 1.0};

  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [name, gen] : generators)
    for (double eps : epsilons) {
      PointStream s = generate_stream(gen);
      ExtractionResult ext = extract(s, eps, 9);
      if (!ext.decided() || ext.indices.size() < 9) {
        ok = false;
        detail << name << " eps=" << eps << " extracted only "
               << ext.indices.size() << "; ";
        continue;
      }
      auto blocks = blocks_from_extraction(ext, s);
      auto full = s.prefix(s.horizon);
      EmbeddingReport rep = embed(blocks, full, eps, false, ext.label);
      if (rep.image.size() < 8 ||
          rep.dist.distortion > (1.0 + eps) * (1 + 1e-9)) {
        ok = false;
        detail << name << " eps=" << eps << " D=" << rep.dist.distortion
               << "; ";
      }
    }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) {
    ok = false;
    detail << "runtime " << elapsed << "s >= 10s; ";
  }
  std::ostringstream msg;
  msg << "4 generators x 3 epsilons, image >= 8, D <= 1+eps, "
      << elapsed << "s" << (detail.str().empty() ? "" : "; " + detail.str());
  report(1, "singleton-mode composite", ok, msg.str());
}

// ---- 2: block mode on clustered instances, 4 to 8 blocks ----
void criterion2() {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t k : {std::size_t{4}, std::size_t{5}, std::size_t{6},
                        std::size_t{7}, std::size_t{8}})
    for (double eps : {0.5, 1.0}) {
      std::ostringstream gen;
      gen << R"({"kind":"two_clusters","n":)" << 5 * k
          << R"(,"clusters":)" << k << R"(,"intra":[)";
      for (std::size_t i = 0; i < k; ++i)
        gen << (i ? "," : "") << 0.2 + 0.01 * static_cast<double>(i);
      gen << R"(],"cross":1.0,"cross_jitter":0.01,"seed":)" << k << "}";
      PointStream s = generate_stream(gen.str());
      FiniteMetricSpace full = s.prefix(s.horizon);
      // one block per cluster (the generator assigns cluster i mod k)
      std::vector<std::vector<std::size_t>> sets(k);
      for (std::size_t i = 0; i < full.size(); ++i) sets[i % k].push_back(i);
      CaseLabel label = CaseLabel::Undecided;
      double scale = 1.0;
      auto blocks = plan_blocks(full, sets, eps, &label, &scale);
      for (std::size_t b = 1; b < blocks.size(); ++b)
        if (blocks[b].internal_distortion > 2.0 + eps) ok = false;
      EmbeddingReport rep = embed(blocks, full, eps, true, label, scale);
      if (rep.dist.distortion > (2.0 + eps) * (1 + 1e-9)) {
        ok = false;
        detail << "k=" << k << " eps=" << eps << " D=" << rep.dist.distortion
               << "; ";
      }
    }
  report(2, "block-mode composite", ok,
         "5 block counts x 2 epsilons, D <= 2+eps" +
             (detail.str().empty() ? "" : "; " + detail.str()));
}

// ---- 3: 1000 randomized apex/product constructions, exact triple checks ----
void criterion3() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> nblocks(2, 6);
  std::uniform_int_distribution<std::size_t> bsize(1, 5);
  std::uniform_real_distribution<double> unif(0.5, 2.0);
  std::size_t violations = 0;
  for (int run = 0; run < 1000; ++run) {
    std::vector<ApexSpace> factors;
    const std::size_t nb = nblocks(rng);
    std::size_t next_ambient = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      Block blk;
      const std::size_t sz = bsize(rng);
      for (std::size_t i = 0; i < sz; ++i) blk.indices.push_back(next_ambient++);
      blk.basepoint = blk.indices.front();
      blk.internal_rho = sz == 1 ? FiniteMetricSpace(1, {0.0})
                                 : test_oracle::random_ultrametric(sz, rng);
      blk.apex_radius = blk.internal_rho.diameter() + unif(rng);
      ApexSpace apex = make_apex(blk);
      if (!is_ultrametric(apex.base.base, 0.0)) ++violations;
      factors.push_back(std::move(apex));
    }
    ProductUltra prod = product_sup(factors);
    if (!is_ultrametric(prod.rho, 0.0)) ++violations;
  }
  std::ostringstream msg;
  msg << "1000 runs, " << violations << " exact triple violations";
  report(3, "ultrametric axiom suite", violations == 0, msg.str());
}

// ---- 4: oracle equivalence and feasibility heredity ----
void criterion4() {
  std::mt19937_64 rng(103);
  std::size_t mismatches = 0, heredity_failures = 0, instances = 0;
  // the enumeration cost explodes with n, so the sample leans small
  const auto size_for = [](int t) -> std::size_t {
    if (t < 5000) return 4;
    if (t < 8000) return 5;
    if (t < 9600) return 6;
    if (t < 9900) return 7;
    return 8;
  };
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = size_for(t);
    auto m = test_oracle::random_int_metric(n, rng);
    ++instances;
    const double claimed = optimal_ultra_distortion(m);
    // the claimed optimum is achieved inside the enumeration class; the
    // branch-and-bound is seeded with it and must find nothing better
    const double best = test_oracle::brute_tree_optimum(m, claimed);
    if (best != claimed) ++mismatches;
    // heredity: drop points one at a time; the optimum never increases
    std::vector<std::size_t> chain(n);
    for (std::size_t i = 0; i < n; ++i) chain[i] = i;
    double prev = claimed;
    while (chain.size() > 2) {
      std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
      chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
      const double sub = optimal_ultra_distortion(m.restrict(chain));
      if (sub > prev * (1 + 1e-12)) ++heredity_failures;
      prev = sub;
    }
  }
  std::ostringstream msg;
  msg << instances << " instances (n = 4..8, distances 1..5), " << mismatches
      << " enumeration mismatches, " << heredity_failures
      << " heredity failures";
  report(4, "oracle equivalence", mismatches == 0 && heredity_failures == 0,
         msg.str());
}

// ---- 5: worked constants ----
void criterion5() {
  bool ok = true;
  std::ostringstream detail;
  const double theta = gap_threshold(1.0);
  if (!(theta >= 0.112372 && theta <= 0.112373)) {
    ok = false;
    detail << "theta(1)=" << theta << " out of range; ";
  }
  // x_i = 10^i, eps = 1: after consuming the basepoint the image is
  // {x_2, x_3}; worst upper ratio rho/d = 990/900 = 99/90 on that pair
  PointStream s = generate_stream(R"({"kind":"powers","n":12,"base":10})");
  ExtractionResult ext = extract(s, 1.0, 3);
  auto blocks = blocks_from_extraction(ext, s);
  EmbeddingReport rep = embed(blocks, s.prefix(s.horizon), 1.0, false,
                              ext.label);
  const double ratio = rep.dist.worst_upper.ratio;
  const std::size_t wi = rep.image[rep.dist.worst_upper.i];
  const std::size_t wj = rep.image[rep.dist.worst_upper.j];
  if (std::fabs(ratio - 99.0 / 90.0) > 1e-12 || wi != 1 || wj != 2) {
    ok = false;
    detail << "worst upper ratio " << ratio << " on stream pair (" << wi + 1
           << "," << wj + 1 << "); ";
  }
  report(5, "worked constants", ok,
         detail.str().empty()
             ? "theta(1) in [0.112372, 0.112373]; powers worst ratio 99/90 on "
               "(x_2, x_3)"
             : detail.str());
}

// ---- 6: Hilbert realization ----
void criterion6() {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<std::size_t> size(2, 100);
  std::size_t failures = 0;
  double worst_recon = 0.0;
  for (int t = 0; t < 200; ++t) {
    auto m = test_oracle::random_ultrametric(size(rng), rng);
    try {
      UltraSpace u = ultra_from_matrix(m);
      CoordinateEmbedding e = coordinates(u);
      worst_recon = std::max(worst_recon, e.max_reconstruction_error);
      if (e.max_reconstruction_error > 1e-9) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  bool control_refused = false;
  try {
    ultra_from_matrix(test_oracle::from_upper(3, {1, 2, 1}));
  } catch (const Error& e) {
    control_refused = e.code() == ErrorCode::NotUltrametric;
  }
  std::ostringstream msg;
  msg << "200 random ultrametrics (n <= 100), " << failures
      << " failures, worst reconstruction error " << worst_recon
      << ", negative control " << (control_refused ? "refused" : "ACCEPTED");
  report(6, "Hilbert realization", failures == 0 && control_refused,
         msg.str());
}

// ---- 7: greedy-vs-optimal gap ----
void criterion7() {
  std::mt19937_64 rng(109);
  std::size_t inversions = 0, runs = 0;
  double gap_sum = 0.0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 6 + static_cast<std::size_t>(t % 7);  // 6..12
    auto m = test_oracle::random_int_metric(n, rng);
    PointStream s = PointStream::from_matrix(m);
    for (double eps : {0.5, 1.0}) {
      ExtractionResult greedy = extract(s, eps, 2);
      SubsetSearchResult opt = best_subset_under_distortion(m, 1.0 + eps, 12);
      ++runs;
      if (greedy.indices.size() > opt.subset.size()) ++inversions;
      gap_sum += static_cast<double>(opt.subset.size()) -
                 static_cast<double>(greedy.indices.size());
    }
  }
  std::ostringstream msg;
  msg << runs << " runs (n = 6..12), " << inversions
      << " greedy-above-oracle inversions, mean gap "
      << gap_sum / static_cast<double>(runs)
      << " points (reported, no threshold asserted)";
  report(7, "greedy-vs-optimal gap", inversions == 0, msg.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures == 0)
    std::printf("all 7 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
