#include "liftcheck/int_matrix.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json_util.hpp"
#include "liftcheck/error.hpp"

namespace liftcheck {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InvariantError("IntMatrix: entries length must equal rows * cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvariantError("IntMatrix: ragged row list");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<Integer> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return IntMatrix(n, n, std::move(e));
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Integer> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InvariantError("IntMatrix: ragged row list");
    for (long x : row) e.emplace_back(x);
  }
  return IntMatrix(r, c, std::move(e));
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Integer> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InvariantError("IntMatrix: ragged row list");
    e.insert(e.end(), row.begin(), row.end());
  }
  return IntMatrix(r, c, std::move(e));
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  std::size_t n = diag.size();
  std::vector<Integer> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return IntMatrix(n, n, std::move(e));
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& images) {
  std::size_t n = images.size();
  std::vector<Integer> e(n * n);
  std::vector<bool> hit(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j] >= n || hit[images[j]]) throw InvariantError("permutation: images must be a bijection");
    hit[images[j]] = true;
    e[images[j] * n + j] = 1;
  }
  return IntMatrix(n, n, std::move(e));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Integer> e(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
  return IntMatrix(cols_, rows_, std::move(e));
}

IntMatrix IntMatrix::pow(unsigned long k) const {
  if (!is_square()) throw InvariantError("pow: matrix must be square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Integer IntMatrix::trace() const {
  if (!is_square()) throw InvariantError("trace: matrix must be square");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvariantError("matrix product: inner dimensions differ");
  std::vector<Integer> e(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) e[i * b.cols_ + j] += aik * b(k, j);
      }
    }
  }
  return IntMatrix(a.rows_, b.cols_, std::move(e));
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantError("matrix sum: shapes differ");
  std::vector<Integer> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
  return IntMatrix(a.rows_, a.cols_, std::move(e));
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantError("matrix difference: shapes differ");
  std::vector<Integer> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
  return IntMatrix(a.rows_, a.cols_, std::move(e));
}

IntMatrix operator-(const IntMatrix& a) {
  std::vector<Integer> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -a.entries_[i];
  return IntMatrix(a.rows_, a.cols_, std::move(e));
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw InvariantError("matrix-vector product: dimension mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  std::size_t r = a.rows() + b.rows();
  std::size_t c = a.cols() + b.cols();
  std::vector<Integer> e(r * c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e[i * c + j] = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) e[(a.rows() + i) * c + a.cols() + j] = b(i, j);
  return IntMatrix(r, c, std::move(e));
}

IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
  IntMatrix out;
  for (const auto& b : blocks) out = direct_sum(out, b);
  return out;
}

std::string write_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix read_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long r = -1, c = -1;
  if (!(in >> r >> c) || r < 0 || c < 0) throw ParseError("matrix text: first line must be \"rows cols\"");
  std::vector<Integer> e;
  e.reserve(static_cast<std::size_t>(r * c));
  std::string tok;
  for (long i = 0; i < r * c; ++i) {
    if (!(in >> tok)) throw ParseError("matrix text: expected " + std::to_string(r * c) + " entries");
    Integer x;
    if (x.set_str(tok, 10) != 0) throw ParseError("matrix text: malformed integer '" + tok + "'");
    e.push_back(std::move(x));
  }
  if (in >> tok) throw ParseError("matrix text: trailing token '" + tok + "'");
  return IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c), std::move(e));
}

std::string write_json(const IntMatrix& m) { return detail::matrix_to_json(m).dump() + "\n"; }

IntMatrix read_json(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw ParseError(std::string("matrix json: ") + e.what());
  }
  return detail::matrix_from_json(j);
}

IntMatrix read_matrix(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return read_json(text);
    break;
  }
  return read_text(text);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_matrix(buf.str());
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace liftcheck
