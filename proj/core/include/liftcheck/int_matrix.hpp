#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liftcheck {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense arbitrary-precision integer matrix, row-major. Immutable after
// construction; every operation returns a new value.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);  // zero matrix
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix diagonal(const std::vector<Integer>& diag);
  static IntMatrix permutation(const std::vector<std::size_t>& images);  // column j = e_{images[j]}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Integer> entries() const { return entries_; }
  std::span<const Integer> row(std::size_t r) const {
    return std::span<const Integer>(entries_).subspan(r * cols_, cols_);
  }
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long k) const;
  Integer trace() const;
  bool is_identity() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const std::vector<IntMatrix>& blocks);

// Text format: "rows cols" on the first line, then one line per row of
// whitespace-separated decimal integers. write_text emits single spaces and a
// trailing newline per line, so write_text(read_text(s)) == s for canonical s.
std::string write_text(const IntMatrix& m);
IntMatrix read_text(std::string_view text);

// {"rows": r, "cols": c, "entries": [[...], ...]}. Entries that do not fit in
// a signed 64-bit integer are emitted as decimal strings; both forms are read.
std::string write_json(const IntMatrix& m);
IntMatrix read_json(std::string_view text);

// Dispatches on the first non-space character ('{' means JSON).
IntMatrix read_matrix(std::string_view text);
IntMatrix read_matrix_file(const std::string& path);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace liftcheck
