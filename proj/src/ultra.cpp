#include "ultra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ue {

double LevelTree::lca_height(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  std::vector<char> mark(nodes.size(), 0);
  for (int v = static_cast<int>(i); v != -1; v = nodes[v].parent) mark[v] = 1;
  for (int v = static_cast<int>(j); v != -1; v = nodes[v].parent)
    if (mark[v]) return nodes[v].height;
  return nodes[root].height;
}

FiniteMetricSpace LevelTree::to_matrix(
    const std::vector<std::string>& labels) const {
  const std::size_t n = n_leaves;
  std::vector<double> d(n * n, 0.0);
  // Walk merges in creation order; each internal node fixes the distance
  // between the leaf sets of its two children.
  std::vector<std::vector<std::size_t>> leaves(nodes.size());
  for (std::size_t i = 0; i < n; ++i) leaves[i] = {i};
  for (std::size_t v = n; v < nodes.size(); ++v) {
    const auto& nd = nodes[v];
    for (auto a : leaves[nd.left])
      for (auto b : leaves[nd.right]) {
        d[a * n + b] = nd.height;
        d[b * n + a] = nd.height;
      }
    leaves[v] = std::move(leaves[nd.left]);
    leaves[v].insert(leaves[v].end(), leaves[nd.right].begin(),
                     leaves[nd.right].end());
  }
  return FiniteMetricSpace(n, std::move(d), labels);
}

namespace {

void newick_rec(const LevelTree& t, int v, const std::vector<std::string>& labels,
                std::ostringstream& os) {
  const auto& nd = t.nodes[v];
  if (nd.left == -1) {
    if (!labels.empty())
      os << labels[v];
    else
      os << "p" << v;
    return;
  }
  os << "(";
  newick_rec(t, nd.left, labels, os);
  os << ":" << nd.height - t.nodes[nd.left].height << ",";
  newick_rec(t, nd.right, labels, os);
  os << ":" << nd.height - t.nodes[nd.right].height << ")";
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

std::string LevelTree::newick(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  os.precision(17);
  if (root != -1) {
    newick_rec(*this, root, labels, os);
    os << ":" << nodes[root].height;
  }
  os << ";";
  return os.str();
}

UltraSpace subdominant_ultrametric(const FiniteMetricSpace& m) {
  const std::size_t n = m.size();
  struct Edge {
    double w;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({m(i, j), i, j});
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.w < b.w; });

  LevelTree tree;
  tree.n_leaves = n;
  tree.nodes.resize(n);
  tree.root = n == 1 ? 0 : -1;

  DisjointSet ds(n);
  std::vector<int> comp_root(n);  // tree node representing each component
  std::iota(comp_root.begin(), comp_root.end(), 0);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  std::vector<double> u(n * n, 0.0);
  std::size_t merges = 0;
  for (const auto& e : edges) {
    int a = ds.find(static_cast<int>(e.i));
    int b = ds.find(static_cast<int>(e.j));
    if (a == b) continue;
    for (auto x : members[a])
      for (auto y : members[b]) {
        u[x * n + y] = e.w;
        u[y * n + x] = e.w;
      }
    LevelTree::Node node;
    node.height = e.w;
    node.left = comp_root[a];
    node.right = comp_root[b];
    const int node_idx = static_cast<int>(tree.nodes.size());
    tree.nodes[node.left].parent = node_idx;
    tree.nodes[node.right].parent = node_idx;
    tree.nodes.push_back(node);

    ds.parent[b] = a;
    comp_root[a] = node_idx;
    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
    members[b].clear();
    if (++merges == n - 1) tree.root = node_idx;
  }

  UltraSpace out;
  out.base = FiniteMetricSpace(n, std::move(u), m.labels());
  out.tree = std::move(tree);
  return out;
}

LevelTree tree_from_matrix(const FiniteMetricSpace& rho) {
  TripleWitness w;
  if (!is_ultrametric(rho, 0.0, &w)) {
    std::ostringstream os;
    os << "matrix is not ultrametric: triple (" << w.i << "," << w.j << ","
       << w.k << ") slack " << w.slack;
    throw Error(ErrorCode::NotUltrametric, os.str());
  }
  // For an exact ultrametric the subdominant is the matrix itself, so the
  // single-linkage tree reproduces rho at LCA heights bit-exactly.
  return subdominant_ultrametric(rho).tree;
}

UltraSpace ultra_from_matrix(const FiniteMetricSpace& rho) {
  UltraSpace u;
  u.tree = tree_from_matrix(rho);
  u.base = rho;
  return u;
}

}  // namespace ue
