#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftcheck/cycle_space.hpp"
#include "liftcheck/free_group.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

bool is_prime(unsigned long p);

// Multiplicities of trivial (rank 1), cyclotomic (rank p-1) and regular
// (rank p) summands of a Z_p-lattice.
struct DecompositionType {
  unsigned long p = 2;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  std::size_t rank() const { return a + b * (p - 1) + c * p; }
  std::string to_string() const;  // "(a,b,c) = (0,0,1)"
  friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

// Uses rank(M - I), rank(1 + M + ... + M^{p-1}) and the Z_p-torsion of the
// coinvariants. Throws unless M is square, p prime and M^p = I.
DecompositionType decomposition_type(const IntMatrix& m, unsigned long p);

enum class Standardness { Standard, Unknown };
std::string to_string(Standardness s);
Standardness is_standard(const IntMatrix& m, unsigned long p);

// Finite graph with a Z_p action by graph automorphisms fixing a base vertex.
class EquivariantGraph {
 public:
  EquivariantGraph(OrientedGraph graph, std::vector<std::size_t> vertex_perm, std::vector<std::size_t> edge_perm,
                   std::size_t base, unsigned long p);

  const OrientedGraph& graph() const { return graph_; }
  const std::vector<std::size_t>& vertex_perm() const { return vertex_perm_; }
  const std::vector<std::size_t>& edge_perm() const { return edge_perm_; }
  std::size_t base() const { return base_; }
  unsigned long prime() const { return p_; }

 private:
  OrientedGraph graph_;
  std::vector<std::size_t> vertex_perm_;
  std::vector<std::size_t> edge_perm_;
  std::size_t base_;
  unsigned long p_;
};

std::string write_equivariant_graph_json(const EquivariantGraph& g);
EquivariantGraph read_equivariant_graph_json(std::string_view text);

// Base vertex with a fixed loops, c bouquets of p cyclically permuted loops,
// and for each of the b cyclotomic summands a fixed auxiliary vertex joined to
// the base by p cyclically permuted edges.
EquivariantGraph build_graph_realization(const DecompositionType& d);

IntMatrix induced_h1_action(const EquivariantGraph& g);
FreeAutomorphism induced_free_automorphism(const EquivariantGraph& g);

struct LiftWitness {
  EquivariantGraph graph;
  FreeAutomorphism automorphism;
};

struct LiftDecision {
  bool lifts = false;  // false means Unknown
  DecompositionType type;
  std::optional<LiftWitness> witness;
  std::string note;
};

// Lifts with a verified witness when the representation is standard;
// Unknown otherwise. Requires M^p = I and M != I.
LiftDecision lift_decision(const IntMatrix& m, unsigned long p);

}  // namespace liftcheck
