#include "liftcheck/abelian_group.hpp"

#include <algorithm>
#include <utility>

#include "liftcheck/error.hpp"

namespace liftcheck {

namespace {

// Mutable row-major scratch matrix for elimination.
struct Work {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;

  explicit Work(const IntMatrix& m) : rows(m.rows()), cols(m.cols()), a(m.entries().begin(), m.entries().end()) {}
  Work(std::size_t r, std::size_t c, bool identity) : rows(r), cols(c), a(r * c) {
    if (identity)
      for (std::size_t i = 0; i < std::min(r, c); ++i) a[i * c + i] = 1;
  }
  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c)
      if (at(j, c) != 0) at(i, c) += k * at(j, c);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows; ++r)
      if (at(r, j) != 0) at(r, i) += k * at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
  IntMatrix freeze() && { return IntMatrix(rows, cols, std::move(a)); }
};

// Transforms are tracked only when the pointers are non-null.
void reduce(Work& A, Work* U, Work* V) {
  const std::size_t r = A.rows, c = A.cols;
  const std::size_t k = std::min(r, c);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          const Integer& x = A.at(i, j);
          if (x == 0) continue;
          if (pi == r || mpz_cmpabs(x.get_mpz_t(), A.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == r) return;  // trailing block is zero

      A.swap_rows(t, pi);
      if (U) U->swap_rows(t, pi);
      A.swap_cols(t, pj);
      if (V) V->swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A.at(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
        q = -q;
        A.add_row(i, t, q);
        if (U) U->add_row(i, t, q);
        if (A.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A.at(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
        q = -q;
        A.add_col(j, t, q);
        if (V) V->add_col(j, t, q);
        if (A.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(A.at(i, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad != r) {
        A.add_row(t, bad, Integer(1));
        if (U) U->add_row(t, bad, Integer(1));
        continue;
      }
      break;
    }
    if (A.at(t, t) < 0) {
      A.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
}

}  // namespace

FinGenAbGroup::FinGenAbGroup(std::size_t free_rank, const std::vector<Integer>& cyclic_orders)
    : free_rank_(free_rank) {
  for (const auto& d : cyclic_orders)
    if (d <= 0) throw InvariantError("FinGenAbGroup: cyclic orders must be positive");
  for (const auto& d : smith_invariants(IntMatrix::diagonal(cyclic_orders)))
    if (d > 1) torsion_.push_back(d);
}

Integer FinGenAbGroup::torsion_order() const {
  Integer p = 1;
  for (const auto& d : torsion_) p *= d;
  return p;
}

std::string FinGenAbGroup::to_string() const {
  std::string out;
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " x ";
    out += "Z_" + d.get_str();
  }
  if (free_rank_ > 0 || out.empty()) {
    if (!out.empty()) out += " x ";
    out += "Z^" + std::to_string(free_rank_);
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Work A(m);
  Work U(m.rows(), m.rows(), true);
  Work V(m.cols(), m.cols(), true);
  reduce(A, &U, &V);
  return SmithForm{std::move(U).freeze(), std::move(A).freeze(), std::move(V).freeze()};
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  Work A(m);
  reduce(A, nullptr, nullptr);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(A.rows, A.cols); ++i) d.push_back(A.at(i, i));
  return d;
}

FinGenAbGroup cokernel(const IntMatrix& m) {
  auto d = smith_invariants(m);
  std::size_t nonzero = 0;
  std::vector<Integer> torsion;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) torsion.push_back(x);
  }
  return FinGenAbGroup(m.rows() - nonzero, torsion);
}

}  // namespace liftcheck
