#include "liftcheck/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "modular.hpp"

namespace liftcheck {

namespace {

using detail::inverse_unit;
using detail::normalize_unit;
using Colouring = std::vector<std::size_t>;

struct EdgeCode {
  std::size_t a, b;
  Order order, s;
  auto operator<=>(const EdgeCode&) const = default;
};

struct Encoding {
  std::vector<Order> orders;
  std::vector<EdgeCode> edges;
  auto operator<=>(const Encoding&) const = default;
};

Order loop_class(const GogEdge& e) {
  Order s = normalize_unit(static_cast<long long>(e.unit_v * inverse_unit(e.unit_u, e.order)), e.order);
  return std::min(s, inverse_unit(s, e.order));
}

// Re-ranks signatures; ties keep the same rank, order is by signature.
template <typename Sig>
Colouring rank_signatures(const std::vector<Sig>& sig) {
  std::vector<Sig> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colouring out(sig.size());
  for (std::size_t v = 0; v < sig.size(); ++v)
    out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  return out;
}

std::size_t cell_count(const Colouring& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const GraphOfGroups& g) : g_(g) {
    const std::size_t V = g.vertex_count();
    gauge_modulus_.assign(V, 1);
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      gauge_modulus_[e.u] = std::lcm(gauge_modulus_[e.u], e.order);
      gauge_modulus_[e.v] = std::lcm(gauge_modulus_[e.v], e.order);
    }
  }

  Encoding run() {
    const std::size_t V = g_.vertex_count();
    using Sig0 = std::pair<Order, std::vector<std::pair<Order, Order>>>;
    std::vector<Sig0> sig(V);
    for (std::size_t v = 0; v < V; ++v) sig[v].first = g_.vertex_orders()[v];
    for (const auto& e : g_.edges())
      if (e.is_loop()) sig[e.u].second.emplace_back(e.order, loop_class(e));
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    search(refine(rank_signatures(sig)));
    return best_;
  }

 private:
  Colouring refine(Colouring c) const {
    const std::size_t V = g_.vertex_count();
    for (;;) {
      std::size_t before = cell_count(c);
      using Sig = std::pair<std::size_t, std::vector<std::pair<std::size_t, Order>>>;
      std::vector<Sig> sig(V);
      for (std::size_t v = 0; v < V; ++v) sig[v].first = c[v];
      for (const auto& e : g_.edges()) {
        if (e.is_loop()) continue;
        sig[e.u].second.emplace_back(c[e.v], e.order);
        sig[e.v].second.emplace_back(c[e.u], e.order);
      }
      for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
      c = rank_signatures(sig);
      if (cell_count(c) == before) return c;
    }
  }

  void search(const Colouring& c) {
    const std::size_t V = g_.vertex_count();
    if (cell_count(c) == V) {
      leaf(c);
      return;
    }
    // First non-singleton cell.
    std::vector<std::size_t> size(V, 0);
    for (auto x : c) ++size[x];
    std::size_t target = 0;
    while (size[target] < 2) ++target;
    for (std::size_t v = 0; v < V; ++v) {
      if (c[v] != target) continue;
      Colouring split(V);
      for (std::size_t w = 0; w < V; ++w) split[w] = 2 * c[w] + (c[w] == target && w != v ? 1 : 0);
      search(refine(rank_signatures(split)));
    }
  }

  void leaf(const Colouring& pos) {
    const std::size_t V = g_.vertex_count();
    Encoding base;
    base.orders.resize(V);
    for (std::size_t v = 0; v < V; ++v) base.orders[pos[v]] = g_.vertex_orders()[v];
    std::vector<std::size_t> gauged;
    for (std::size_t v = 0; v < V; ++v)
      if (gauge_modulus_[v] > 2) gauged.push_back(v);
    std::vector<std::vector<Order>> choices;
    for (auto v : gauged) choices.push_back(detail::units_mod(gauge_modulus_[v]));
    std::vector<Order> gauge(V, 1);
    std::vector<std::size_t> idx(gauged.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < gauged.size(); ++i) gauge[gauged[i]] = choices[i][idx[i]];
      Encoding enc = base;
      for (const auto& e : g_.edges()) {
        // Loops are gauge invariant.
        const Order cu = e.is_loop() ? 1 : gauge[e.u] % e.order, cv = e.is_loop() ? 1 : gauge[e.v] % e.order;
        Order uu = e.unit_u * inverse_unit(cu, e.order);
        Order uv = e.unit_v * inverse_unit(cv, e.order);
        std::size_t a = pos[e.u], b = pos[e.v];
        if (a > b) {
          std::swap(a, b);
          std::swap(uu, uv);
        }
        Order s = normalize_unit(static_cast<long long>(uv * inverse_unit(uu % e.order, e.order)), e.order);
        if (a == b) s = std::min(s, inverse_unit(s, e.order));
        enc.edges.push_back({a, b, e.order, s});
      }
      std::sort(enc.edges.begin(), enc.edges.end());
      if (!have_best_ || enc < best_) {
        best_ = std::move(enc);
        have_best_ = true;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }

  const GraphOfGroups& g_;
  std::vector<Order> gauge_modulus_;
  Encoding best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const GraphOfGroups& g) {
  Encoding enc = Canonicalizer(g).run();
  std::vector<GogEdge> edges;
  std::string key;
  for (std::size_t v = 0; v < enc.orders.size(); ++v) key += (v ? "," : "") + std::to_string(enc.orders[v]);
  key += "|";
  for (std::size_t i = 0; i < enc.edges.size(); ++i) {
    const auto& c = enc.edges[i];
    edges.push_back({c.a, c.b, c.order, 1, c.s});
    key += (i ? "," : "") + std::to_string(c.a) + "-" + std::to_string(c.b) + ":" + std::to_string(c.order) + ":" +
           std::to_string(c.s);
  }
  return {GraphOfGroups(enc.orders, std::move(edges)), key};
}

std::string canonical_key(const GraphOfGroups& g) { return canonical_form(g).key; }

}  // namespace liftcheck
