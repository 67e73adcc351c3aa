#pragma once

#include <string>

#include "liftcheck/graph_of_groups.hpp"

namespace liftcheck {

// Representative of the isomorphism class of a decorated graph of groups.
// Isomorphisms are vertex relabelings, edge reversals, and changes of the
// chosen generator of any vertex or edge group. In the canonical graph every
// edge runs from its lower to its higher endpoint with unit 1 at the lower
// end, and edges are sorted.
struct CanonicalForm {
  GraphOfGroups graph;
  std::string key;  // equal keys iff isomorphic
};

CanonicalForm canonical_form(const GraphOfGroups& g);
std::string canonical_key(const GraphOfGroups& g);

}  // namespace liftcheck
