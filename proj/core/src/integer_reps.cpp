#include "liftcheck/integer_reps.hpp"

#include "json_util.hpp"
#include "liftcheck/abelian_group.hpp"
#include "liftcheck/error.hpp"
#include "liftcheck/linalg.hpp"

namespace liftcheck {

using detail::json;

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string DecompositionType::to_string() const {
  return "(a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

namespace {

void require_period(const IntMatrix& m, unsigned long p, const char* who) {
  if (!is_prime(p)) throw InvariantError(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
  if (m.rows() != m.cols()) throw InvariantError(std::string(who) + ": matrix must be square");
  if (!m.pow(p).is_identity()) throw InvariantError(std::string(who) + ": M^p != I");
}

}  // namespace

DecompositionType decomposition_type(const IntMatrix& m, unsigned long p) {
  require_period(m, p, "decomposition_type");
  const std::size_t n = m.rows();
  const IntMatrix id = IntMatrix::identity(n);
  IntMatrix norm(n, n);
  IntMatrix power = id;
  for (unsigned long i = 0; i < p; ++i) {
    norm = norm + power;
    power = power * m;
  }
  const std::size_t fixed = n - rank(m - id);
  const std::size_t invariant = n - rank(norm);  // (b + c)(p - 1)
  const FinGenAbGroup coinv = coinvariants(m);
  for (const auto& d : coinv.torsion())
    if (d != Integer(p)) throw InvariantError("decomposition_type: inconsistent ranks (coinvariant torsion " + coinv.to_string() + ")");
  DecompositionType t;
  t.p = p;
  t.b = coinv.torsion().size();
  if (invariant % (p - 1) != 0 || invariant / (p - 1) < t.b || invariant / (p - 1) - t.b > fixed)
    throw InvariantError("decomposition_type: inconsistent ranks");
  t.c = invariant / (p - 1) - t.b;
  t.a = fixed - t.c;
  if (t.rank() != n) throw InvariantError("decomposition_type: inconsistent ranks");
  return t;
}

std::string to_string(Standardness s) { return s == Standardness::Standard ? "Standard" : "Unknown"; }

Standardness is_standard(const IntMatrix& m, unsigned long p) {
  DecompositionType t = decomposition_type(m, p);
  if (p < 23 || t.b == 0) return Standardness::Standard;
  return Standardness::Unknown;
}

EquivariantGraph::EquivariantGraph(OrientedGraph graph, std::vector<std::size_t> vertex_perm,
                                   std::vector<std::size_t> edge_perm, std::size_t base, unsigned long p)
    : graph_(std::move(graph)), vertex_perm_(std::move(vertex_perm)), edge_perm_(std::move(edge_perm)), base_(base), p_(p) {
  if (!is_prime(p_)) throw InvariantError("EquivariantGraph: p = " + std::to_string(p_) + " is not prime");
  if (!graph_.connected()) throw InvariantError("EquivariantGraph: graph must be connected");
  if (!is_graph_automorphism(graph_, vertex_perm_, edge_perm_))
    throw InvariantError("EquivariantGraph: permutations do not respect incidence");
  if (base_ >= graph_.vertex_count || vertex_perm_[base_] != base_)
    throw InvariantError("EquivariantGraph: base vertex must be fixed by the action");
  auto period_divides_p = [&](const std::vector<std::size_t>& perm) {
    for (std::size_t x = 0; x < perm.size(); ++x) {
      std::size_t y = x;
      for (unsigned long k = 0; k < p_; ++k) y = perm[y];
      if (y != x) return false;
    }
    return true;
  };
  if (!period_divides_p(vertex_perm_) || !period_divides_p(edge_perm_))
    throw InvariantError("EquivariantGraph: action must have order 1 or p");
}

std::string write_equivariant_graph_json(const EquivariantGraph& g) {
  json j;
  j["prime"] = g.prime();
  j["base"] = g.base();
  j["vertex_count"] = g.graph().vertex_count;
  json edges = json::array();
  for (auto [a, b] : g.graph().edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["vertex_perm"] = g.vertex_perm();
  j["edge_perm"] = g.edge_perm();
  return j.dump();
}

EquivariantGraph read_equivariant_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("equivariant graph: ") + e.what());
  }
  try {
    OrientedGraph g;
    g.vertex_count = j.at("vertex_count").get<std::size_t>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return EquivariantGraph(std::move(g), j.at("vertex_perm").get<std::vector<std::size_t>>(),
                            j.at("edge_perm").get<std::vector<std::size_t>>(), j.at("base").get<std::size_t>(),
                            j.at("prime").get<unsigned long>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("equivariant graph: ") + e.what());
  }
}

EquivariantGraph build_graph_realization(const DecompositionType& d) {
  if (!is_prime(d.p)) throw InvariantError("build_graph_realization: p = " + std::to_string(d.p) + " is not prime");
  OrientedGraph g;
  g.vertex_count = 1 + d.b;
  std::vector<std::size_t> vperm(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) vperm[v] = v;
  std::vector<std::size_t> eperm;
  auto add_cycle = [&](std::size_t target) {
    const std::size_t first = g.edges.size();
    for (unsigned long k = 0; k < d.p; ++k) {
      g.edges.emplace_back(0, target);
      eperm.push_back(first + (k + 1) % d.p);
    }
  };
  for (std::size_t i = 0; i < d.a; ++i) {
    eperm.push_back(g.edges.size());
    g.edges.emplace_back(0, 0);
  }
  for (std::size_t i = 0; i < d.c; ++i) add_cycle(0);
  for (std::size_t i = 0; i < d.b; ++i) add_cycle(1 + i);
  return EquivariantGraph(std::move(g), std::move(vperm), std::move(eperm), 0, d.p);
}

IntMatrix induced_h1_action(const EquivariantGraph& g) {
  SpanningTree tree(g.graph(), g.base());
  return h1_action(g.graph(), tree, g.edge_perm());
}

FreeAutomorphism induced_free_automorphism(const EquivariantGraph& g) {
  SpanningTree tree(g.graph(), g.base());
  return pi1_action(g.graph(), tree, g.vertex_perm(), g.edge_perm());
}

LiftDecision lift_decision(const IntMatrix& m, unsigned long p) {
  require_period(m, p, "lift_decision");
  if (m.is_identity()) throw InvariantError("lift_decision: M must not be the identity");
  LiftDecision out;
  out.type = decomposition_type(m, p);
  if (is_standard(m, p) == Standardness::Unknown) {
    out.note = "cyclotomic-type summands at p >= 23 may be exotic; standardness is not decided";
    return out;
  }
  EquivariantGraph graph = build_graph_realization(out.type);
  FreeAutomorphism psi = induced_free_automorphism(graph);
  const IntMatrix ab = abelianize(psi);
  if (!(decomposition_type(ab, p) == out.type) || !(matrix_order(ab) == MatrixOrder::finite(p)))
    throw std::logic_error("lift_decision: realization does not reproduce the decomposition type");
  out.lifts = true;
  out.note = p < 23 ? "every Z_p-lattice is standard for p < 23" : "no cyclotomic-type summands";
  out.witness = LiftWitness{std::move(graph), std::move(psi)};
  return out;
}

}  // namespace liftcheck
