#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftcheck/abelian_group.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck {

Integer determinant(const IntMatrix& m);  // fraction-free (Bareiss)
std::size_t rank(const IntMatrix& m);     // rank over Q

// Coefficients of det(x I - M), lowest degree first; the last entry is 1.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);
std::string polynomial_to_string(const std::vector<Integer>& coeffs);

std::uint64_t euler_phi(std::uint64_t n);

// Orders k that some element of GL(n, Z) can have exactly: lcm of a multiset
// {d_i} with sum phi(d_i) <= n. Sorted ascending, always contains 1.
std::vector<std::uint64_t> admissible_orders(unsigned n);

// Maximum of admissible_orders(n). n >= 1.
std::uint64_t max_torsion_order_gl(unsigned n);

// Order of a unimodular matrix: nullopt means infinite.
class MatrixOrder {
 public:
  static MatrixOrder infinite() { return MatrixOrder(); }
  static MatrixOrder finite(std::uint64_t k) { return MatrixOrder(k); }
  bool is_finite() const { return value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "Infinite"; }
  friend bool operator==(const MatrixOrder&, const MatrixOrder&) = default;

 private:
  MatrixOrder() = default;
  explicit MatrixOrder(std::uint64_t k) : value_(k) {}
  std::optional<std::uint64_t> value_;
};

// Smallest k >= 1 with M^k = I, searched over admissible_orders(n).
// Throws InvariantError unless M is square with determinant +-1.
MatrixOrder matrix_order(const IntMatrix& m);

// Abelianization of the extension of Z^n by Z_q with monodromy M and
// t^q = a: cokernel of [M - I | -a ; 0 | q].
FinGenAbGroup extension_abelianization(const IntMatrix& m, unsigned long q, const IntVector& a);

// Standard alternating form on a_1, b_1, ..., a_g, b_g.
IntMatrix symplectic_form(std::size_t genus);
bool is_symplectic(const IntMatrix& m);

// Rank of the fixed sublattice ker(M - I).
std::size_t fixed_rank(const IntMatrix& m);
// Coinvariants Z^n / (M - I) Z^n.
FinGenAbGroup coinvariants(const IntMatrix& m);

}  // namespace liftcheck
