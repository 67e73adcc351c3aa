#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liftcheck/abelian_group.hpp"
#include "liftcheck/cycle_space.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

using Rational = mpq_class;
using Order = std::uint64_t;

// Edge of a graph of finite cyclic groups. The edge group Z_order embeds into
// the endpoint group Z_{m_x} by generator -> unit_x * (m_x / order). Loops
// have u == v. Units are stored reduced into 1..order.
struct GogEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Order order = 1;
  Order unit_u = 1;
  Order unit_v = 1;

  bool is_loop() const { return u == v; }
  friend bool operator==(const GogEdge&, const GogEdge&) = default;
};

class GraphOfGroups {
 public:
  GraphOfGroups() = default;
  // Validates: at least one vertex, connected, endpoint indices in range,
  // order(e) | m_u and order(e) | m_v, gcd(unit, order(e)) = 1.
  GraphOfGroups(std::vector<Order> vertex_orders, std::vector<GogEdge> edges);

  const std::vector<Order>& vertex_orders() const { return vertex_orders_; }
  const std::vector<GogEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertex_orders_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  OrientedGraph underlying_graph() const;
  // No non-loop edge whose group equals an endpoint group.
  bool is_reduced() const;

  friend bool operator==(const GraphOfGroups&, const GraphOfGroups&) = default;

 private:
  std::vector<Order> vertex_orders_;
  std::vector<GogEdge> edges_;
};

// Image of the edge generator in Z_{m_x} at endpoint x of edge e (x = u or v side).
Order embed_u(const GraphOfGroups& g, const GogEdge& e);
Order embed_v(const GraphOfGroups& g, const GogEdge& e);

// sum 1/|G_v| - sum 1/|G_e|
Rational euler_char(const GraphOfGroups& g);

// Contracts non-loop edges whose group equals an endpoint group, lowest edge
// index first, until none remain.
GraphOfGroups reduce(const GraphOfGroups& g);

// Maximal tree as per-edge flags.
struct MaximalTree {
  std::vector<bool> tree_edge;
  friend bool operator==(const MaximalTree&, const MaximalTree&) = default;
};
MaximalTree default_maximal_tree(const GraphOfGroups& g);  // BFS from vertex 0, edges in index order
bool is_maximal_tree(const GraphOfGroups& g, const MaximalTree& t);
std::vector<MaximalTree> all_maximal_trees(const GraphOfGroups& g);  // small graphs only

// Generators x_v (order m_v) and t_e (non-tree e); one relation per edge:
// unit_u (m_u/m_e) x_u = unit_v (m_v/m_e) x_v.
FinGenAbGroup abelianization(const GraphOfGroups& g, const MaximalTree& t);
FinGenAbGroup abelianization(const GraphOfGroups& g);

// Homomorphism pi_1(G) -> Z_q given on vertex generators and stable letters.
struct QuotientMap {
  Order target_order = 1;
  std::vector<Order> vertex_images;  // x_v -> vertex_images[v]
  std::vector<Order> edge_images;    // t_e -> edge_images[e]; 0 on tree edges
  MaximalTree tree;

  friend bool operator==(const QuotientMap&, const QuotientMap&) = default;
  friend auto operator<=>(const QuotientMap& a, const QuotientMap& b) {
    if (auto c = a.vertex_images <=> b.vertex_images; c != 0) return c;
    return a.edge_images <=> b.edge_images;
  }
};

// Empty string when f is a surjective homomorphism injective on every vertex
// group; otherwise the violated condition.
std::string quotient_map_defect(const GraphOfGroups& g, const QuotientMap& f);
bool is_torsion_free_quotient(const GraphOfGroups& g, const QuotientMap& f);

// Rank of the free kernel of a torsion-free quotient onto Z_q: 1 - q chi(G).
// Throws if that is not a nonnegative integer.
std::size_t kernel_rank(const GraphOfGroups& g, Order q);

// Every torsion-free surjection onto Z_q (default maximal tree), in
// lexicographic order of (vertex_images, edge_images).
std::vector<QuotientMap> torsion_free_quotients(const GraphOfGroups& g, Order q);

// Stable letter t_e may be replaced by y t_e y' with y in G_u, y' in G_v: an
// automorphism of pi_1 that moves f(t_e) within its coset of the subgroup of
// order lcm(m_u, m_v). One representative per class (edge images reduced into
// [0, q / lcm)), each with the size of its class.
struct QuotientClass {
  QuotientMap representative;
  std::uint64_t multiplicity = 0;
};
std::vector<QuotientClass> torsion_free_quotient_classes(const GraphOfGroups& g, Order q);

// Quotient of the Bass-Serre tree by ker f. Vertices above v are the cosets
// Z_q / f(G_v); edges above e the cosets Z_q / f(G_e), joining coset a of the
// u-side to coset a + f(t_e) of the v-side. The deck generator translates by 1.
struct CoverGraph {
  OrientedGraph graph;
  std::vector<std::size_t> vertex_perm;
  std::vector<std::size_t> edge_perm;
  std::vector<std::size_t> vertex_base;  // first cover vertex above each G-vertex
  std::vector<std::size_t> edge_base;    // first cover edge above each G-edge

  long euler_characteristic() const {
    return static_cast<long>(graph.vertex_count) - static_cast<long>(graph.edges.size());
  }
  std::size_t h1_rank() const { return graph.first_betti_number(); }
};
CoverGraph covering_graph(const GraphOfGroups& g, const QuotientMap& f);

// Deck generator on H_1(cover) in the BFS cycle basis rooted at cover vertex 0.
IntMatrix induced_kernel_action(const GraphOfGroups& g, const QuotientMap& f);

// Order of the largest subgroup z of some vertex group that propagates along
// every edge and is fixed by every transport: the torsion part of the center
// of pi_1(G).
Order central_vertex_subgroup(const GraphOfGroups& g);

struct Effectiveness {
  bool effective = false;
  Order central_order = 1;
  std::string reason;
};
Effectiveness is_effective(const GraphOfGroups& g, const QuotientMap& f);

// {"vertices": [m_0, ...], "edges": [{"u","v","order","unit_u","unit_v"}, ...]}
std::string write_graph_json(const GraphOfGroups& g);
GraphOfGroups read_graph_json(std::string_view text);
GraphOfGroups read_graph_file(const std::string& path);

std::string to_string(const Rational& r);

}  // namespace liftcheck
