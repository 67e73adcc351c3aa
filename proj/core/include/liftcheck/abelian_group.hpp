#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

// Finitely generated abelian group Z^free_rank + Z_{d1} + ... + Z_{dk} with
// d1 | d2 | ... | dk and every di >= 2.
class FinGenAbGroup {
 public:
  FinGenAbGroup() = default;
  // Accepts any list of cyclic orders (entries <= 1 are dropped after
  // canonicalization); the stored chain is the canonical invariant-factor form.
  FinGenAbGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders);

  static FinGenAbGroup free(std::size_t rank) { return FinGenAbGroup(rank, {}); }
  static FinGenAbGroup cyclic(const Integer& order) { return FinGenAbGroup(0, {order}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  Integer torsion_order() const;
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  // "Z_2 x Z_6 x Z^3", "Z^0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;
  friend auto operator<=>(const FinGenAbGroup& a, const FinGenAbGroup& b) {
    if (auto c = a.free_rank_ <=> b.free_rank_; c != 0) return c;
    if (a.torsion_.size() != b.torsion_.size()) return a.torsion_.size() <=> b.torsion_.size();
    for (std::size_t i = 0; i < a.torsion_.size(); ++i) {
      int c = cmp(a.torsion_[i], b.torsion_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d1 | d2 | ..., nonnegative
  IntMatrix V;  // cols x cols, unimodular
};

// D = U * M * V. Pivots on the smallest nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

// Diagonal of D (length min(rows, cols)), without computing transforms.
std::vector<Integer> smith_invariants(const IntMatrix& m);

// Quotient of Z^rows by the span of the columns of m.
FinGenAbGroup cokernel(const IntMatrix& m);

}  // namespace liftcheck
