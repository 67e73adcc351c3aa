#include "liftcheck/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liftcheck/error.hpp"

namespace liftcheck {

namespace {

// Fraction-free Gaussian elimination. Returns (rank, determinant sign-correct
// when the matrix is square and of full rank).
std::pair<std::size_t, Integer> bareiss(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * c + j]; };
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && at(piv, col) == 0) ++piv;
    if (piv == r) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < c; ++j) std::swap(at(piv, j), at(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        at(i, j) = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  Integer det = 0;
  if (r == c && rank == r) det = r == 0 ? Integer(1) : Integer(sign * prev);
  if (r == c && r == 0) det = 1;
  return {rank, det};
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvariantError("determinant: matrix must be square");
  return bareiss(m).second;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).first; }

std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw InvariantError("characteristic_polynomial: matrix must be square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier; every division below is exact over Z.
  std::vector<Integer> coeff(n + 1);
  coeff[n] = 1;
  IntMatrix mk(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Integer> scaled(n * n);
    for (std::size_t i = 0; i < n; ++i) scaled[i * n + i] = coeff[n - k + 1];
    mk = m * mk + IntMatrix(n, n, std::move(scaled));
    Integer t = (m * mk).trace();
    Integer c = -t;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    coeff[n - k] = c;
  }
  return coeff;
}

std::string polynomial_to_string(const std::vector<Integer>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> admissible_orders(unsigned n) {
  if (n == 0) return {1};
  if (n > 48) throw InvariantError("admissible_orders: rank above 48 is not supported");
  // reach[c] = lcms achievable with total cyclotomic degree exactly c.
  std::vector<std::set<std::uint64_t>> reach(n + 1);
  reach[0].insert(1);
  const std::uint64_t dmax = 2ULL * n * n + 2;
  for (std::uint64_t d = 2; d <= dmax; ++d) {
    std::uint64_t w = euler_phi(d);
    if (w > n) continue;
    // Unbounded knapsack over cyclotomic degrees.
    for (std::uint64_t cost = w; cost <= n; ++cost) {
      for (std::uint64_t l : std::vector<std::uint64_t>(reach[cost - w].begin(), reach[cost - w].end()))
        reach[cost].insert(std::lcm(l, d));
    }
  }
  std::set<std::uint64_t> all;
  for (const auto& s : reach) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

std::uint64_t max_torsion_order_gl(unsigned n) {
  if (n == 0) throw InvariantError("max_torsion_order_gl: rank must be >= 1");
  return admissible_orders(n).back();
}

MatrixOrder matrix_order(const IntMatrix& m) {
  if (!m.is_square()) throw InvariantError("matrix_order: matrix must be square");
  Integer det = determinant(m);
  if (det != 1 && det != -1) throw InvariantError("matrix_order: matrix must be unimodular (det = +-1)");
  const std::size_t n = m.rows();
  if (n == 0) return MatrixOrder::finite(1);
  // Walk powers incrementally; only admissible exponents are tested.
  auto candidates = admissible_orders(static_cast<unsigned>(n));
  IntMatrix power = IntMatrix::identity(n);
  std::uint64_t exponent = 0;
  for (std::uint64_t k : candidates) {
    power = power * m.pow(k - exponent);
    exponent = k;
    if (power.is_identity()) return MatrixOrder::finite(k);
  }
  return MatrixOrder::infinite();
}

FinGenAbGroup extension_abelianization(const IntMatrix& m, unsigned long q, const IntVector& a) {
  if (!m.is_square()) throw InvariantError("extension_abelianization: monodromy must be square");
  if (q == 0) throw InvariantError("extension_abelianization: q must be positive");
  if (a.size() != m.rows()) throw InvariantError("extension_abelianization: cocycle vector has wrong length");
  if (!m.pow(q).is_identity()) throw InvariantError("extension_abelianization: monodromy must satisfy M^q = I");
  const std::size_t n = m.rows();
  std::vector<Integer> e((n + 1) * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * (n + 1) + j] = m(i, j) - (i == j ? 1 : 0);
    e[i * (n + 1) + n] = -a[i];
  }
  e[n * (n + 1) + n] = Integer(q);
  return cokernel(IntMatrix(n + 1, n + 1, std::move(e)));
}

IntMatrix symplectic_form(std::size_t genus) {
  const std::size_t n = 2 * genus;
  std::vector<Integer> e(n * n);
  for (std::size_t i = 0; i < genus; ++i) {
    e[(2 * i) * n + 2 * i + 1] = 1;
    e[(2 * i + 1) * n + 2 * i] = -1;
  }
  return IntMatrix(n, n, std::move(e));
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw InvariantError("is_symplectic: matrix must be square of even size");
  IntMatrix j = symplectic_form(m.rows() / 2);
  return m.transpose() * j * m == j;
}

std::size_t fixed_rank(const IntMatrix& m) {
  if (!m.is_square()) throw InvariantError("fixed_rank: matrix must be square");
  return m.rows() - rank(m - IntMatrix::identity(m.rows()));
}

FinGenAbGroup coinvariants(const IntMatrix& m) {
  if (!m.is_square()) throw InvariantError("coinvariants: matrix must be square");
  return cokernel(m - IntMatrix::identity(m.rows()));
}

}  // namespace liftcheck
