#include "liftcheck/cycle_space.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "liftcheck/error.hpp"

namespace liftcheck {

std::size_t OrientedGraph::component_count() const {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = vertex_count;
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

std::size_t OrientedGraph::first_betti_number() const { return edges.size() + component_count() - vertex_count; }

SpanningTree::SpanningTree(const OrientedGraph& g, std::size_t root)
    : graph_(g), root_(root), tree_edge_(g.edges.size(), false), parent_edge_(g.vertex_count, npos),
      basis_index_(g.edges.size(), npos) {
  if (root >= g.vertex_count) throw InvariantError("SpanningTree: root out of range");
  std::vector<std::vector<std::size_t>> incident(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (a >= g.vertex_count || b >= g.vertex_count) throw InvariantError("SpanningTree: edge endpoint out of range");
    incident[a].push_back(e);
    if (b != a) incident[b].push_back(e);
  }
  std::vector<bool> seen(g.vertex_count, false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[x]) {
      auto [a, b] = g.edges[e];
      std::size_t y = a == x ? b : a;
      if (seen[y]) continue;
      seen[y] = true;
      ++reached;
      tree_edge_[e] = true;
      parent_edge_[y] = e;
      queue.push_back(y);
    }
  }
  if (reached != g.vertex_count) throw InvariantError("SpanningTree: graph must be connected");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (tree_edge_[e]) continue;
    basis_index_[e] = basis_edges_.size();
    basis_edges_.push_back(e);
  }
}

std::vector<std::pair<std::size_t, int>> SpanningTree::path_from_root(std::size_t v) const {
  std::vector<std::pair<std::size_t, int>> up;
  while (v != root_) {
    std::size_t e = parent_edge_[v];
    auto [a, b] = graph_.edges[e];
    // Step toward v: forward if the edge points at v.
    if (b == v) {
      up.emplace_back(e, +1);
      v = a;
    } else {
      up.emplace_back(e, -1);
      v = b;
    }
  }
  std::reverse(up.begin(), up.end());
  return up;
}

std::vector<std::pair<std::size_t, int>> SpanningTree::fundamental_loop(std::size_t e) const {
  auto [a, b] = graph_.edges[e];
  auto walk = path_from_root(a);
  walk.emplace_back(e, +1);
  auto back = path_from_root(b);
  for (auto it = back.rbegin(); it != back.rend(); ++it) walk.emplace_back(it->first, -it->second);
  return walk;
}

IntMatrix h1_action(const OrientedGraph& g, const SpanningTree& tree, const std::vector<std::size_t>& edge_perm) {
  if (edge_perm.size() != g.edges.size()) throw InvariantError("h1_action: edge permutation has wrong length");
  const auto& basis = tree.basis_edges();
  const std::size_t n = basis.size();
  std::vector<Integer> m(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> chain(g.edges.size(), 0);
    for (auto [e, dir] : tree.fundamental_loop(basis[j])) chain[edge_perm[e]] += dir;
    for (std::size_t i = 0; i < n; ++i) m[i * n + j] = chain[basis[i]];
  }
  return IntMatrix(n, n, std::move(m));
}

namespace {

FreeWord loop_image(const SpanningTree& tree, std::size_t e, const std::vector<std::size_t>& edge_perm,
                    std::size_t rank) {
  std::vector<Letter> letters;
  for (auto [step, dir] : tree.fundamental_loop(e)) {
    std::size_t img = edge_perm[step];
    std::size_t idx = tree.basis_index(img);
    if (idx == SpanningTree::npos) continue;
    letters.push_back(dir * static_cast<Letter>(idx + 1));
  }
  return FreeWord(rank, std::move(letters));
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace

FreeAutomorphism pi1_action(const OrientedGraph& g, const SpanningTree& tree, const std::vector<std::size_t>& vertex_perm,
                            const std::vector<std::size_t>& edge_perm) {
  if (!is_graph_automorphism(g, vertex_perm, edge_perm))
    throw InvariantError("pi1_action: permutations do not define a graph automorphism");
  if (vertex_perm[tree.root()] != tree.root()) throw InvariantError("pi1_action: automorphism must fix the root");
  const auto& basis = tree.basis_edges();
  const std::size_t n = basis.size();
  auto edge_inv = invert(edge_perm);
  std::vector<FreeWord> img, inv;
  for (std::size_t j = 0; j < n; ++j) {
    img.push_back(loop_image(tree, basis[j], edge_perm, n));
    inv.push_back(loop_image(tree, basis[j], edge_inv, n));
  }
  return FreeAutomorphism(std::move(img), std::move(inv));
}

bool is_graph_automorphism(const OrientedGraph& g, const std::vector<std::size_t>& vertex_perm,
                           const std::vector<std::size_t>& edge_perm) {
  if (vertex_perm.size() != g.vertex_count || edge_perm.size() != g.edges.size()) return false;
  auto bijective = [](const std::vector<std::size_t>& p) {
    std::vector<bool> hit(p.size(), false);
    for (auto x : p) {
      if (x >= p.size() || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  if (!bijective(vertex_perm) || !bijective(edge_perm)) return false;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    auto [c, d] = g.edges[edge_perm[e]];
    if (vertex_perm[a] != c || vertex_perm[b] != d) return false;
  }
  return true;
}

}  // namespace liftcheck
