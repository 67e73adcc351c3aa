#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liftcheck/canonical.hpp"
#include "liftcheck/certificate.hpp"
#include "liftcheck/graph_of_groups.hpp"

namespace liftcheck {

// phi + I_{n-2} with phi = [[0,1],[-1,1]].
IntMatrix phi_target(unsigned n);

struct GraphEnumeration {
  std::vector<CanonicalForm> graphs;  // sorted by key
  EnumerationStats stats;
};

// Reduced graphs of groups with vertex and edge orders dividing q and
// q chi = 1 - n, up to isomorphism. With `prune`, only a single vertex of
// order q carrying loops.
GraphEnumeration enumerate_graphs(unsigned n, Order q, bool prune, unsigned workers = 1);

// Raw, not deduplicated stream of the generator's output.
void for_each_raw_graph(unsigned n, Order q, bool prune, const std::function<void(const GraphOfGroups&)>& visit);

// Filter (i): free rank equal to the target's fixed rank and torsion no
// larger than an extension of the coinvariant torsion by Z_q allows. For
// phi + I this is exactly Z_m + Z^{n-2} with m | q.
bool abelianization_form_ok(const FinGenAbGroup& ab, const TargetInvariants& target, Order q);

CandidateTrace evaluate_candidate(const CanonicalForm& g, unsigned n, Order q, const TargetInvariants& target);

Certificate enumerate_candidates(unsigned n, Order q, const IntMatrix& target, bool prune, unsigned workers = 1);
Certificate verify_phi_nonlift(unsigned n, bool prune = true, unsigned workers = 1);

}  // namespace liftcheck
