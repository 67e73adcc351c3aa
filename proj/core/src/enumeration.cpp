#include "liftcheck/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "liftcheck/error.hpp"
#include "liftcheck/linalg.hpp"
#include "modular.hpp"
#include "parallel.hpp"

namespace liftcheck {

IntMatrix phi_target(unsigned n) {
  if (n < 2) throw InvariantError("phi_target: rank must be >= 2");
  return direct_sum(IntMatrix{{0, 1}, {-1, 1}}, IntMatrix::identity(n - 2));
}

TargetInvariants target_invariants(const IntMatrix& target) {
  if (target.rows() != target.cols()) throw InvariantError("target must be square");
  return {target, characteristic_polynomial(target), fixed_rank(target), coinvariants(target)};
}

namespace {

std::vector<Order> divisors_of(Order q) {
  std::vector<Order> out;
  for (Order d = 1; d <= q; ++d)
    if (q % d == 0) out.push_back(d);
  return out;
}

struct Token {
  std::size_t u, v;
  Order order, s;
  long cost;
};

// Scaled Euler characteristic: q chi = sum q/m_v - sum q/m_e.
class Generator {
 public:
  Generator(unsigned n, Order q, bool prune, const std::function<void(const GraphOfGroups&)>& visit)
      : q_(q), prune_(prune), visit_(visit), target_(1 - static_cast<long>(n)), divisors_(divisors_of(q)) {}

  void run() {
    for (Order m : divisors_) {
      if (prune_ && m != q_) continue;
      orders_ = {m};
      parent_ = {0};
      tree_order_ = {0};
      grow(static_cast<long>(q_ / m));
    }
  }

 private:
  void grow(long scaled) {
    close(scaled);
    if (prune_) return;
    const std::size_t V = orders_.size();
    const std::size_t first_parent = V == 1 ? 0 : parent_.back();
    for (std::size_t p = first_parent; p < V; ++p) {
      for (Order m : divisors_) {
        for (Order d : divisors_) {
          if (d >= m || d >= orders_[p] || m % d != 0 || orders_[p] % d != 0) continue;
          // Siblings are labelled in nondecreasing (edge order, vertex order).
          if (V > 1 && p == parent_.back() && std::pair(d, m) < std::pair(tree_order_.back(), orders_.back())) continue;
          long next = scaled + static_cast<long>(q_ / m) - static_cast<long>(q_ / d);
          if (next < target_) continue;
          orders_.push_back(m);
          parent_.push_back(p);
          tree_order_.push_back(d);
          grow(next);
          orders_.pop_back();
          parent_.pop_back();
          tree_order_.pop_back();
        }
      }
    }
  }

  void close(long scaled) {
    const long budget = scaled - target_;
    if (budget < 0) return;
    const std::size_t V = orders_.size();
    tokens_.clear();
    for (std::size_t u = 0; u < V; ++u) {
      for (std::size_t v = u; v < V; ++v) {
        for (Order d : divisors_) {
          if (orders_[u] % d != 0 || orders_[v] % d != 0) continue;
          if (u != v && (d == orders_[u] || d == orders_[v])) continue;
          for (Order s : detail::units_mod(d)) {
            if (u == v && detail::inverse_unit(s, d) < s) continue;
            tokens_.push_back({u, v, d, s, static_cast<long>(q_ / d)});
          }
        }
      }
    }
    chosen_.clear();
    pick(0, budget);
  }

  void pick(std::size_t start, long budget) {
    if (budget == 0) {
      emit();
      return;
    }
    for (std::size_t i = start; i < tokens_.size(); ++i) {
      if (tokens_[i].cost > budget) continue;
      chosen_.push_back(i);
      pick(i, budget - tokens_[i].cost);
      chosen_.pop_back();
    }
  }

  void emit() {
    std::vector<GogEdge> edges;
    for (std::size_t v = 1; v < orders_.size(); ++v) edges.push_back({parent_[v], v, tree_order_[v], 1, 1});
    for (std::size_t i : chosen_) {
      const Token& t = tokens_[i];
      edges.push_back({t.u, t.v, t.order, 1, t.s});
    }
    visit_(GraphOfGroups(orders_, std::move(edges)));
  }

  Order q_;
  bool prune_;
  const std::function<void(const GraphOfGroups&)>& visit_;
  long target_;
  std::vector<Order> divisors_;
  std::vector<Order> orders_;
  std::vector<std::size_t> parent_;
  std::vector<Order> tree_order_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

void for_each_raw_graph(unsigned n, Order q, bool prune, const std::function<void(const GraphOfGroups&)>& visit) {
  if (n < 2) throw InvariantError("enumeration: rank must be >= 2");
  if (q < 1) throw InvariantError("enumeration: quotient order must be >= 1");
  Generator(n, q, prune, visit).run();
}

GraphEnumeration enumerate_graphs(unsigned n, Order q, bool prune, unsigned workers) {
  std::vector<GraphOfGroups> raw;
  for_each_raw_graph(n, q, prune, [&](const GraphOfGroups& g) { raw.push_back(g); });
  std::vector<CanonicalForm> forms(raw.size());
  detail::parallel_for(raw.size(), workers, [&](std::size_t i) { forms[i] = canonical_form(raw[i]); });
  std::map<std::string, GraphOfGroups> distinct;
  for (auto& f : forms) distinct.try_emplace(f.key, std::move(f.graph));
  GraphEnumeration out;
  out.stats.raw_graphs = raw.size();
  for (auto& [key, g] : distinct) {
    out.stats.max_edges_seen = std::max(out.stats.max_edges_seen, g.edge_count());
    out.stats.max_vertices_seen = std::max(out.stats.max_vertices_seen, g.vertex_count());
    out.graphs.push_back({std::move(g), key});
  }
  out.stats.candidates = out.graphs.size();
  return out;
}

bool abelianization_form_ok(const FinGenAbGroup& ab, const TargetInvariants& target, Order q) {
  if (ab.free_rank() != target.fixed_rank) return false;
  const Integer bound = target.coinvariants.torsion_order() * Integer(static_cast<unsigned long>(q));
  if (!mpz_divisible_p(bound.get_mpz_t(), ab.torsion_order().get_mpz_t())) return false;
  return ab.torsion().size() <= target.coinvariants.torsion().size() + 1;
}

CandidateTrace evaluate_candidate(const CanonicalForm& g, unsigned n, Order q, const TargetInvariants& target) {
  CandidateTrace t;
  t.key = g.key;
  t.graph = g.graph;
  t.euler_characteristic = euler_char(g.graph);
  t.abelianization = abelianization(g.graph);
  t.abelianization_form = abelianization_form_ok(t.abelianization, target, q);
  t.central_order = central_vertex_subgroup(g.graph);
  for (auto& cls : torsion_free_quotient_classes(g.graph, q)) {
    QuotientTrace qt;
    t.quotient_count += cls.multiplicity;
    qt.kernel_rank = kernel_rank(g.graph, q);
    CoverGraph cover = covering_graph(g.graph, cls.representative);
    qt.cover_vertices = cover.graph.vertex_count;
    qt.cover_edges = cover.graph.edges.size();
    qt.cover_euler_characteristic = cover.euler_characteristic();
    qt.cover_h1_rank = cover.h1_rank();
    SpanningTree tree(cover.graph, 0);
    qt.action = h1_action(cover.graph, tree, cover.edge_perm);
    qt.charpoly = characteristic_polynomial(qt.action);
    qt.fixed_rank = fixed_rank(qt.action);
    qt.coinvariants = coinvariants(qt.action);
    qt.filters.abelianization = t.abelianization_form;
    qt.filters.kernel_action = qt.kernel_rank == n && qt.charpoly == target.charpoly &&
                               qt.fixed_rank == target.fixed_rank && qt.coinvariants == target.coinvariants;
    qt.filters.effective = t.central_order == 1;
    qt.quotient = std::move(cls);
    t.quotients.push_back(std::move(qt));
  }
  return t;
}

Certificate enumerate_candidates(unsigned n, Order q, const IntMatrix& target, bool prune, unsigned workers) {
  if (target.rows() != n || target.cols() != n)
    throw InvariantError("enumerate_candidates: target must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!target.pow(q).is_identity()) throw InvariantError("enumerate_candidates: target^q must be the identity");
  const TargetInvariants inv = target_invariants(target);
  GraphEnumeration ge = enumerate_graphs(n, q, prune, workers);

  Certificate c;
  c.rank = n;
  c.quotient_order = q;
  c.pruned = prune;
  c.target = target;
  c.max_edges = n + q - 1;
  c.max_vertices = n + q;
  c.stats = ge.stats;
  c.candidates.resize(ge.graphs.size());
  detail::parallel_for(ge.graphs.size(), workers,
                       [&](std::size_t i) { c.candidates[i] = evaluate_candidate(ge.graphs[i], n, q, inv); });
  for (const auto& t : c.candidates) {
    c.stats.quotient_classes += t.quotients.size();
    for (std::size_t i = 0; i < t.quotients.size(); ++i)
      if (t.quotients[i].filters.all()) c.survivors.push_back({t.key, i});
  }
  c.verdict = c.survivors.empty() ? Verdict::NonLifting : Verdict::SurvivorsFound;
  return c;
}

Certificate verify_phi_nonlift(unsigned n, bool prune, unsigned workers) {
  if (n < 3) throw InvariantError("verify_phi_nonlift: rank must be >= 3");
  return enumerate_candidates(n, 6, phi_target(n), prune, workers);
}

}  // namespace liftcheck
