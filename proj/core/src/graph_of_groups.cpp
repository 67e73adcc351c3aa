#include "liftcheck/graph_of_groups.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "liftcheck/error.hpp"
#include "modular.hpp"

namespace liftcheck {

namespace {

using detail::inverse_unit;
using detail::normalize_unit;

Order element_order(Order y, Order q) { return q / std::gcd(y % q, q); }

}  // namespace

GraphOfGroups::GraphOfGroups(std::vector<Order> vertex_orders, std::vector<GogEdge> edges)
    : vertex_orders_(std::move(vertex_orders)), edges_(std::move(edges)) {
  if (vertex_orders_.empty()) throw InvariantError("GraphOfGroups: at least one vertex required");
  for (Order m : vertex_orders_)
    if (m == 0) throw InvariantError("GraphOfGroups: vertex orders must be >= 1");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    const std::string tag = "GraphOfGroups: edge " + std::to_string(i) + ": ";
    if (e.u >= vertex_orders_.size() || e.v >= vertex_orders_.size()) throw InvariantError(tag + "endpoint out of range");
    if (e.order == 0) throw InvariantError(tag + "edge order must be >= 1");
    if (vertex_orders_[e.u] % e.order != 0 || vertex_orders_[e.v] % e.order != 0)
      throw InvariantError(tag + "edge group must embed in both endpoint groups (m_e | m_u, m_e | m_v)");
    if (std::gcd(e.unit_u, e.order) != 1 || std::gcd(e.unit_v, e.order) != 1)
      throw InvariantError(tag + "embedding units must be coprime to the edge order");
    e.unit_u = normalize_unit(static_cast<long long>(e.unit_u), e.order);
    e.unit_v = normalize_unit(static_cast<long long>(e.unit_v), e.order);
  }
  if (!underlying_graph().connected()) throw InvariantError("GraphOfGroups: underlying graph must be connected");
}

OrientedGraph GraphOfGroups::underlying_graph() const {
  OrientedGraph g;
  g.vertex_count = vertex_orders_.size();
  for (const auto& e : edges_) g.edges.emplace_back(e.u, e.v);
  return g;
}

bool GraphOfGroups::is_reduced() const {
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    if (e.order == vertex_orders_[e.u] || e.order == vertex_orders_[e.v]) return false;
  }
  return true;
}

Order embed_u(const GraphOfGroups& g, const GogEdge& e) {
  Order m = g.vertex_orders()[e.u];
  return e.unit_u * (m / e.order) % m;
}

Order embed_v(const GraphOfGroups& g, const GogEdge& e) {
  Order m = g.vertex_orders()[e.v];
  return e.unit_v * (m / e.order) % m;
}

Rational euler_char(const GraphOfGroups& g) {
  Rational chi = 0;
  for (Order m : g.vertex_orders()) chi += Rational(1, m);
  for (const auto& e : g.edges()) chi -= Rational(1, e.order);
  chi.canonicalize();
  return chi;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GraphOfGroups reduce(const GraphOfGroups& g) {
  std::vector<Order> verts = g.vertex_orders();
  std::vector<GogEdge> edges = g.edges();
  for (;;) {
    std::size_t pick = edges.size();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_loop() && (e.order == verts[e.u] || e.order == verts[e.v])) {
        pick = i;
        break;
      }
    }
    if (pick == edges.size()) break;
    const GogEdge e = edges[pick];
    // The absorbed endpoint's group is isomorphic to the edge group.
    const bool absorb_u = e.order == verts[e.u];
    const std::size_t gone = absorb_u ? e.u : e.v;
    const std::size_t keep = absorb_u ? e.v : e.u;
    const Order unit_gone = absorb_u ? e.unit_u : e.unit_v;
    const Order unit_keep = absorb_u ? e.unit_v : e.unit_u;
    // x_gone -> w (m_keep / m_gone) x_keep
    const Order w = unit_keep * inverse_unit(unit_gone, e.order) % e.order;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
    for (auto& f : edges) {
      if (f.u == gone) {
        f.u = keep;
        f.unit_u = normalize_unit(static_cast<long long>(f.unit_u * w), f.order);
      }
      if (f.v == gone) {
        f.v = keep;
        f.unit_v = normalize_unit(static_cast<long long>(f.unit_v * w), f.order);
      }
    }
    verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(gone));
    for (auto& f : edges) {
      if (f.u > gone) --f.u;
      if (f.v > gone) --f.v;
    }
  }
  return GraphOfGroups(std::move(verts), std::move(edges));
}

MaximalTree default_maximal_tree(const GraphOfGroups& g) {
  SpanningTree t(g.underlying_graph(), 0);
  MaximalTree out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) out.tree_edge.push_back(t.is_tree_edge(e));
  return out;
}

bool is_maximal_tree(const GraphOfGroups& g, const MaximalTree& t) {
  if (t.tree_edge.size() != g.edge_count()) return false;
  OrientedGraph sub;
  sub.vertex_count = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (t.tree_edge[e]) sub.edges.emplace_back(g.edges()[e].u, g.edges()[e].v);
  return sub.edges.size() + 1 == sub.vertex_count && sub.connected();
}

std::vector<MaximalTree> all_maximal_trees(const GraphOfGroups& g) {
  const std::size_t E = g.edge_count();
  if (E > 20) throw InvariantError("all_maximal_trees: too many edges");
  std::vector<MaximalTree> out;
  for (std::uint32_t mask = 0; mask < (1U << E); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 != g.vertex_count()) continue;
    MaximalTree t;
    for (std::size_t e = 0; e < E; ++e) t.tree_edge.push_back((mask >> e) & 1U);
    if (is_maximal_tree(g, t)) out.push_back(std::move(t));
  }
  return out;
}

FinGenAbGroup abelianization(const GraphOfGroups& g, const MaximalTree& t) {
  if (!is_maximal_tree(g, t)) throw InvariantError("abelianization: T must be a spanning tree of the graph");
  const std::size_t V = g.vertex_count();
  std::size_t stable = 0;
  for (bool b : t.tree_edge)
    if (!b) ++stable;
  const std::size_t gens = V + stable;
  const std::size_t rels = V + g.edge_count();
  std::vector<Integer> m(gens * rels);
  for (std::size_t v = 0; v < V; ++v) m[v * rels + v] = Integer(static_cast<unsigned long>(g.vertex_orders()[v]));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const std::size_t col = V + i;
    m[e.u * rels + col] += Integer(static_cast<unsigned long>(embed_u(g, e)));
    m[e.v * rels + col] -= Integer(static_cast<unsigned long>(embed_v(g, e)));
  }
  // Stable letters appear in no abelianized relation; their rows stay zero.
  return cokernel(IntMatrix(gens, rels, std::move(m)));
}

FinGenAbGroup abelianization(const GraphOfGroups& g) { return abelianization(g, default_maximal_tree(g)); }

std::string quotient_map_defect(const GraphOfGroups& g, const QuotientMap& f) {
  const Order q = f.target_order;
  if (q == 0) return "target order must be positive";
  if (f.vertex_images.size() != g.vertex_count()) return "vertex image count differs from vertex count";
  if (f.edge_images.size() != g.edge_count()) return "edge image count differs from edge count";
  if (!is_maximal_tree(g, f.tree)) return "recorded tree is not a maximal tree";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (f.vertex_images[v] >= q) return "vertex image out of range";
    if (element_order(f.vertex_images[v], q) != g.vertex_orders()[v])
      return "vertex group " + std::to_string(v) + " does not inject (torsion-free kernel criterion)";
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (f.edge_images[i] >= q) return "edge image out of range";
    if (f.tree.tree_edge[i] && f.edge_images[i] != 0) return "tree edge " + std::to_string(i) + " must map to 0";
    const auto& e = g.edges()[i];
    // Image of the edge generator through either endpoint.
    Order via_u = (e.unit_u * (g.vertex_orders()[e.u] / e.order) % q) * f.vertex_images[e.u] % q;
    Order via_v = (e.unit_v * (g.vertex_orders()[e.v] / e.order) % q) * f.vertex_images[e.v] % q;
    if (via_u != via_v) return "edge relation " + std::to_string(i) + " fails in Z_" + std::to_string(q);
  }
  Order span = q;
  for (Order y : f.vertex_images) span = std::gcd(span, y);
  for (Order y : f.edge_images) span = std::gcd(span, y);
  if (span != 1) return "images do not generate Z_" + std::to_string(q);
  return {};
}

bool is_torsion_free_quotient(const GraphOfGroups& g, const QuotientMap& f) {
  return quotient_map_defect(g, f).empty();
}

std::size_t kernel_rank(const GraphOfGroups& g, Order q) {
  Rational r = 1 - Rational(static_cast<unsigned long>(q)) * euler_char(g);
  r.canonicalize();
  if (r.get_den() != 1 || r < 0) throw InvariantError("kernel_rank: 1 - q chi(G) is not a nonnegative integer");
  return r.get_num().get_ui();
}

namespace {

// Vertex image choices and per-edge stable-letter ranges; `step_for_edge`
// chooses between raw enumeration (range q) and class representatives.
template <typename Visit>
void for_each_quotient(const GraphOfGroups& g, Order q, bool classes, Visit&& visit) {
  const std::size_t V = g.vertex_count();
  std::vector<std::vector<Order>> vertex_choices(V);
  for (std::size_t v = 0; v < V; ++v) {
    const Order m = g.vertex_orders()[v];
    if (q % m != 0) return;  // no injective image
    for (Order k = 0; k < m; ++k)
      if (std::gcd(k, m) == 1) vertex_choices[v].push_back(k * (q / m) % q);
  }
  const MaximalTree tree = default_maximal_tree(g);
  std::vector<std::size_t> stable;
  std::vector<Order> range, weight;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (tree.tree_edge[i]) continue;
    stable.push_back(i);
    const auto& e = g.edges()[i];
    const Order L = std::lcm(g.vertex_orders()[e.u], g.vertex_orders()[e.v]);
    range.push_back(classes ? q / L : q);
    weight.push_back(classes ? L : 1);
  }

  QuotientMap f;
  f.target_order = q;
  f.vertex_images.assign(V, 0);
  f.edge_images.assign(g.edge_count(), 0);
  f.tree = tree;

  auto edges_ok = [&]() {
    for (const auto& e : g.edges()) {
      Order via_u = (e.unit_u * (g.vertex_orders()[e.u] / e.order) % q) * f.vertex_images[e.u] % q;
      Order via_v = (e.unit_v * (g.vertex_orders()[e.v] / e.order) % q) * f.vertex_images[e.v] % q;
      if (via_u != via_v) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> pick_stable = [&](std::size_t k) {
    if (k == stable.size()) {
      Order span = q;
      for (Order y : f.vertex_images) span = std::gcd(span, y);
      for (Order y : f.edge_images) span = std::gcd(span, y);
      if (span != 1) return;
      std::uint64_t mult = 1;
      for (Order w : weight) mult *= w;
      visit(f, mult);
      return;
    }
    for (Order y = 0; y < range[k]; ++y) {
      f.edge_images[stable[k]] = y;
      pick_stable(k + 1);
    }
    f.edge_images[stable[k]] = 0;
  };

  std::function<void(std::size_t)> pick_vertex = [&](std::size_t v) {
    if (v == V) {
      if (edges_ok()) pick_stable(0);
      return;
    }
    for (Order y : vertex_choices[v]) {
      f.vertex_images[v] = y;
      pick_vertex(v + 1);
    }
  };
  pick_vertex(0);
}

}  // namespace

std::vector<QuotientMap> torsion_free_quotients(const GraphOfGroups& g, Order q) {
  std::vector<QuotientMap> out;
  for_each_quotient(g, q, false, [&](const QuotientMap& f, std::uint64_t) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuotientClass> torsion_free_quotient_classes(const GraphOfGroups& g, Order q) {
  std::vector<QuotientClass> out;
  for_each_quotient(g, q, true, [&](const QuotientMap& f, std::uint64_t mult) { out.push_back({f, mult}); });
  std::sort(out.begin(), out.end(),
            [](const QuotientClass& a, const QuotientClass& b) { return a.representative < b.representative; });
  return out;
}

CoverGraph covering_graph(const GraphOfGroups& g, const QuotientMap& f) {
  if (auto defect = quotient_map_defect(g, f); !defect.empty())
    throw InvariantError("covering_graph: invalid quotient map: " + defect);
  const Order q = f.target_order;
  CoverGraph c;
  std::size_t nv = 0;
  for (Order m : g.vertex_orders()) {
    c.vertex_base.push_back(nv);
    nv += q / m;
  }
  c.graph.vertex_count = nv;
  c.vertex_perm.resize(nv);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Order cosets = q / g.vertex_orders()[v];
    for (Order a = 0; a < cosets; ++a) c.vertex_perm[c.vertex_base[v] + a] = c.vertex_base[v] + (a + 1) % cosets;
  }
  auto vertex_at = [&](std::size_t v, Order a) { return c.vertex_base[v] + a % (q / g.vertex_orders()[v]); };
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const Order cosets = q / e.order;
    c.edge_base.push_back(c.graph.edges.size());
    for (Order a = 0; a < cosets; ++a)
      c.graph.edges.emplace_back(vertex_at(e.u, a), vertex_at(e.v, (a + f.edge_images[i]) % q));
  }
  c.edge_perm.resize(c.graph.edges.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Order cosets = q / g.edges()[i].order;
    for (Order a = 0; a < cosets; ++a) c.edge_perm[c.edge_base[i] + a] = c.edge_base[i] + (a + 1) % cosets;
  }
  return c;
}

IntMatrix induced_kernel_action(const GraphOfGroups& g, const QuotientMap& f) {
  CoverGraph c = covering_graph(g, f);
  SpanningTree tree(c.graph, 0);
  return h1_action(c.graph, tree, c.edge_perm);
}

Order central_vertex_subgroup(const GraphOfGroups& g) {
  const std::size_t V = g.vertex_count();
  const auto& m = g.vertex_orders();
  SpanningTree tree(g.underlying_graph(), 0);
  // BFS order of vertices, each with its parent edge.
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (vertex, parent edge)
  {
    std::vector<bool> seen(V, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::size_t x = queue[h];
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!tree.is_tree_edge(i)) continue;
        const auto& e = g.edges()[i];
        std::size_t y = e.u == x ? e.v : (e.v == x ? e.u : V);
        if (y == V || seen[y]) continue;
        seen[y] = true;
        order.emplace_back(y, i);
        queue.push_back(y);
      }
    }
  }
  // Pull z in G_from back to the edge group and push it to G_to; false when
  // z is not in the image of the edge group.
  auto transport = [&](const GogEdge& e, bool from_u, Order z, Order& out) {
    const Order mf = m[from_u ? e.u : e.v], mt = m[from_u ? e.v : e.u];
    const Order uf = from_u ? e.unit_u : e.unit_v, ut = from_u ? e.unit_v : e.unit_u;
    const Order step = mf / e.order;
    if (z % step != 0) return false;
    const Order w = (z / step) * inverse_unit(uf, e.order) % e.order;
    out = w * ut % e.order * (mt / e.order) % mt;
    return true;
  };

  Order count = 0;
  std::vector<Order> z(V);
  for (Order a = 0; a < m[0]; ++a) {
    z[0] = a;
    bool ok = true;
    for (auto [y, i] : order) {
      const auto& e = g.edges()[i];
      const bool from_u = e.v == y;
      if (!transport(e, from_u, z[from_u ? e.u : e.v], z[y])) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < g.edge_count(); ++i) {
      if (tree.is_tree_edge(i)) continue;
      const auto& e = g.edges()[i];
      Order image = 0;
      if (!transport(e, true, z[e.u], image) || image != z[e.v]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

Effectiveness is_effective(const GraphOfGroups& g, const QuotientMap& f) {
  if (auto defect = quotient_map_defect(g, f); !defect.empty())
    throw InvariantError("is_effective: invalid quotient map: " + defect);
  Effectiveness out;
  out.central_order = central_vertex_subgroup(g);
  out.effective = out.central_order == 1;
  out.reason = out.effective ? "no nontrivial central torsion"
                             : "central vertex subgroup of order " + std::to_string(out.central_order) +
                                   " acts trivially on the kernel";
  return out;
}

std::string write_graph_json(const GraphOfGroups& g) {
  detail::json j;
  j["vertices"] = g.vertex_orders();
  detail::json edges = detail::json::array();
  for (const auto& e : g.edges()) {
    detail::json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["order"] = e.order;
    je["unit_u"] = e.unit_u;
    je["unit_v"] = e.unit_v;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

GraphOfGroups read_graph_json(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array())
    throw ParseError("graph json: expected {\"vertices\": [...], \"edges\": [...]}");
  std::vector<Order> verts;
  for (const auto& x : j["vertices"]) {
    long m = detail::small_int(x, "vertices[]");
    if (m < 1) throw InvariantError("GraphOfGroups: vertex orders must be >= 1");
    verts.push_back(static_cast<Order>(m));
  }
  std::vector<GogEdge> edges;
  for (const auto& je : j["edges"]) {
    if (!je.is_object()) throw ParseError("graph json: edge must be an object");
    GogEdge e;
    long u = detail::small_int(detail::field(je, "u", "graph json edge"), "edge.u");
    long v = detail::small_int(detail::field(je, "v", "graph json edge"), "edge.v");
    long order = detail::small_int(detail::field(je, "order", "graph json edge"), "edge.order");
    if (u < 0 || v < 0) throw InvariantError("GraphOfGroups: edge endpoint out of range");
    if (order < 1) throw InvariantError("GraphOfGroups: edge order must be >= 1");
    e.u = static_cast<std::size_t>(u);
    e.v = static_cast<std::size_t>(v);
    e.order = static_cast<Order>(order);
    long uu = je.contains("unit_u") ? detail::small_int(je["unit_u"], "edge.unit_u") : 1;
    long uv = je.contains("unit_v") ? detail::small_int(je["unit_v"], "edge.unit_v") : 1;
    e.unit_u = normalize_unit(uu, e.order);
    e.unit_v = normalize_unit(uv, e.order);
    if (std::gcd(static_cast<Order>(std::abs(uu)), e.order) != 1 || std::gcd(static_cast<Order>(std::abs(uv)), e.order) != 1)
      throw InvariantError("GraphOfGroups: embedding units must be coprime to the edge order");
    edges.push_back(e);
  }
  return GraphOfGroups(std::move(verts), std::move(edges));
}

GraphOfGroups read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_graph_json(buf.str());
}

}  // namespace liftcheck
