#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

std::uint64_t hurwitz_bound(unsigned g);  // 84(g-1), g >= 2
std::uint64_t wiman_bound(unsigned g);    // 4g+2, g >= 2

// Fixed elements of SL(2, Z) of order d in {1, 2, 3, 4, 6}.
IntMatrix sl2_torsion(unsigned d);

// Block diagonal in the basis a_1, b_1, ..., a_g, b_g.
IntMatrix block_symplectic(const std::vector<IntMatrix>& blocks);

struct LefschetzWitness {
  unsigned power = 0;
  Integer value;
};

struct ObstructionReport {
  enum class Verdict { Obstructed, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::vector<LefschetzWitness> lefschetz;  // L_k for k = 1..d-1
  std::string note;
};
std::string to_string(ObstructionReport::Verdict v);

// L_k = 2 - trace(M^k). A finite-order orientation-preserving surface map
// has L_k = number of fixed points of its k-th power, so any negative L_k
// obstructs realization. Necessary condition only.
ObstructionReport lefschetz_obstruction(const IntMatrix& m, unsigned d);

// One cycle of a signed block permutation: blocks permuted cyclically with
// a single twist of the given order.
struct TwistedCycle {
  std::size_t length = 1;
  unsigned twist = 1;
  auto operator<=>(const TwistedCycle&) const = default;
};

struct SymplecticWitness {
  IntMatrix matrix;
  std::uint64_t order = 0;
  std::vector<TwistedCycle> cycles;  // nonincreasing
};

// Element of maximal order among twisted block permutations (ties: smallest
// cycle list). Returned only when its order exceeds wiman_bound(g).
std::optional<SymplecticWitness> wiman_violation_symplectic(unsigned g);
SymplecticWitness twisted_block_permutation(const std::vector<TwistedCycle>& cycles);

// Genus of a free Z_m cover of a genus-h surface: m(h-1)+1.
std::uint64_t free_action_genus(std::uint64_t m, std::uint64_t h);

// n' with 1 - n = m(1 - n') and n' >= 2, if it exists.
std::optional<std::uint64_t> free_by_free_parameters(std::uint64_t n, std::uint64_t m);

struct MaxOrderTable {
  unsigned n = 0;
  std::optional<Integer> out_fn;           // 2^n n!, n > 2
  std::optional<Integer> out_fn_abelian;   // 2^n, n > 3
  std::optional<Integer> gl_exceptional;   // n in {2, 4, 6, 7, 8}
  std::string gl_note;
};
MaxOrderTable max_order_tables(unsigned n);

}  // namespace liftcheck
