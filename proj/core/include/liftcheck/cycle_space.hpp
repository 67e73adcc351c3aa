#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liftcheck/free_group.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

// Finite oriented multigraph; loops allowed. edges[i] = (origin, terminus).
struct OrientedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t component_count() const;
  bool connected() const { return vertex_count > 0 && component_count() == 1; }
  // E - V + components
  std::size_t first_betti_number() const;
};

// Breadth-first spanning tree rooted at `root`; neighbours are scanned in edge
// index order, so the tree is the lexicographically first one. The non-tree
// edges, in index order, index a basis of H_1 and of pi_1(graph, root).
class SpanningTree {
 public:
  SpanningTree(const OrientedGraph& g, std::size_t root);

  std::size_t root() const { return root_; }
  bool is_tree_edge(std::size_t e) const { return tree_edge_[e]; }
  const std::vector<std::size_t>& basis_edges() const { return basis_edges_; }
  // Position of a non-tree edge in basis_edges(), or npos.
  std::size_t basis_index(std::size_t e) const { return basis_index_[e]; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Signed edge steps (edge, +1 forward / -1 backward) from the root to v.
  std::vector<std::pair<std::size_t, int>> path_from_root(std::size_t v) const;
  // Closed walk root -> origin(e) -> e -> terminus(e) -> root.
  std::vector<std::pair<std::size_t, int>> fundamental_loop(std::size_t e) const;

 private:
  OrientedGraph graph_;
  std::size_t root_;
  std::vector<bool> tree_edge_;
  std::vector<std::size_t> parent_edge_;  // npos at the root
  std::vector<std::size_t> basis_edges_;
  std::vector<std::size_t> basis_index_;
};

// Action on H_1 of an orientation-preserving graph automorphism given by
// (vertex_perm, edge_perm), in the fundamental-cycle basis of `tree`.
// Column j is the image of the j-th basis cycle.
IntMatrix h1_action(const OrientedGraph& g, const SpanningTree& tree, const std::vector<std::size_t>& edge_perm);

// Action on pi_1(g, root) when the automorphism fixes the root. The free basis
// is the fundamental loops; generator j+1 is basis_edges()[j].
FreeAutomorphism pi1_action(const OrientedGraph& g, const SpanningTree& tree, const std::vector<std::size_t>& vertex_perm,
                            const std::vector<std::size_t>& edge_perm);

// Checks that the permutations are bijections and respect incidence.
bool is_graph_automorphism(const OrientedGraph& g, const std::vector<std::size_t>& vertex_perm,
                           const std::vector<std::size_t>& edge_perm);

}  // namespace liftcheck
