#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liftcheck/abelian_group.hpp"
#include "liftcheck/graph_of_groups.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

inline constexpr int kCertificateSchemaVersion = 1;

// Invariants of the target action compared against each kernel action.
struct TargetInvariants {
  IntMatrix matrix;
  std::vector<Integer> charpoly;
  std::size_t fixed_rank = 0;
  FinGenAbGroup coinvariants;
};
TargetInvariants target_invariants(const IntMatrix& target);

struct FilterOutcome {
  bool abelianization = false;  // (i)
  bool kernel_action = false;   // (ii)
  bool effective = false;       // (iii)
  bool all() const { return abelianization && kernel_action && effective; }
};

struct QuotientTrace {
  QuotientClass quotient;
  std::size_t kernel_rank = 0;
  std::size_t cover_vertices = 0;
  std::size_t cover_edges = 0;
  long cover_euler_characteristic = 0;
  std::size_t cover_h1_rank = 0;
  IntMatrix action;
  std::vector<Integer> charpoly;
  std::size_t fixed_rank = 0;
  FinGenAbGroup coinvariants;
  FilterOutcome filters;
};

struct CandidateTrace {
  std::string key;
  GraphOfGroups graph;
  Rational euler_characteristic;
  FinGenAbGroup abelianization;
  bool abelianization_form = false;
  Order central_order = 1;
  std::uint64_t quotient_count = 0;  // raw surjections, summed over classes
  std::vector<QuotientTrace> quotients;
};

struct EnumerationStats {
  std::uint64_t raw_graphs = 0;  // before isomorphism reduction
  std::size_t candidates = 0;
  std::size_t quotient_classes = 0;
  std::size_t max_edges_seen = 0;
  std::size_t max_vertices_seen = 0;
};

enum class Verdict { NonLifting, SurvivorsFound };
std::string to_string(Verdict v);

struct Survivor {
  std::string key;
  std::size_t quotient_index = 0;
};

struct Certificate {
  unsigned rank = 0;
  Order quotient_order = 6;
  bool pruned = true;
  IntMatrix target;
  std::size_t max_edges = 0;
  std::size_t max_vertices = 0;
  EnumerationStats stats;
  std::vector<CandidateTrace> candidates;
  std::vector<Survivor> survivors;
  Verdict verdict = Verdict::NonLifting;
};

std::string write_certificate(const Certificate& c);

struct ReplayReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
};

// Recomputes every candidate from its recorded graph and compares all
// recorded values and filter outcomes. With `re_enumerate`, also regenerates
// the candidate list and compares keys.
ReplayReport replay_certificate(std::string_view text, bool re_enumerate = false, unsigned workers = 1);

}  // namespace liftcheck
