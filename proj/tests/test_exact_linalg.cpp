#include <random>

#include "doctest.h"
#include "liftcheck/abelian_group.hpp"
#include "liftcheck/error.hpp"
#include "liftcheck/linalg.hpp"
#include "oracles.hpp"

using namespace liftcheck;

namespace {

const IntMatrix phi{{0, 1}, {-1, 1}};

bool is_unimodular(const IntMatrix& m) {
  Integer d = oracle::det(m);
  return d == 1 || d == -1;
}

void check_smith(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  REQUIRE(s.U * m * s.V == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  CHECK(s.D.rows() == m.rows());
  CHECK(s.D.cols() == m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (s.D(i, i) == 0) {
      CHECK(s.D(i + 1, i + 1) == 0);
    } else {
      CHECK(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
    }
  }
  auto expected = oracle::invariant_factors(m);
  for (std::size_t i = 0; i < k; ++i) CHECK(abs(s.D(i, i)) == abs(expected[i]));
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  SmithForm s = smith_normal_form(IntMatrix::diagonal({2, 3}));
  CHECK(s.D == IntMatrix::diagonal({1, 6}));
  check_smith(IntMatrix::diagonal({2, 3}));

  for (std::size_t n : {0, 1, 3}) {
    SmithForm id = smith_normal_form(IntMatrix::identity(n));
    CHECK(id.D == IntMatrix::identity(n));
    CHECK(id.U == IntMatrix::identity(n));
    CHECK(id.V == IntMatrix::identity(n));
  }

  IntMatrix pm = phi - IntMatrix::identity(2);
  CHECK(pm == IntMatrix{{-1, 1}, {-1, 0}});
  CHECK(smith_normal_form(pm).D == IntMatrix::identity(2));
  check_smith(IntMatrix{{4, 6, 8}, {10, 12, 14}});
  check_smith(IntMatrix(3, 2));
}

TEST_CASE("smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) check_smith(oracle::random_matrix(rng, dim(rng), dim(rng), 9));
}

TEST_CASE("cokernel") {
  CHECK(cokernel(phi - IntMatrix::identity(2)).is_trivial());
  CHECK(cokernel(IntMatrix(4, 4)) == FinGenAbGroup::free(4));
  CHECK(cokernel(IntMatrix(3, 0)) == FinGenAbGroup::free(3));
  CHECK(cokernel(IntMatrix::diagonal({2, 3})) == FinGenAbGroup::cyclic(6));
  CHECK(cokernel(IntMatrix::diagonal({2, 3})).to_string() == "Z_6");
  CHECK(FinGenAbGroup(2, {4, 6, 1}).to_string() == "Z_2 x Z_12 x Z^2");
  CHECK(FinGenAbGroup().to_string() == "Z^0");
  CHECK_THROWS_AS(FinGenAbGroup(0, {0}), InvariantError);
}

TEST_CASE("cokernel is invariant under unimodular change of basis") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 3, 4, 6);
    IntMatrix u = oracle::random_unimodular(rng, 3), v = oracle::random_unimodular(rng, 4);
    CHECK(cokernel(u * m * v) == cokernel(m));
  }
}

TEST_CASE("determinant, rank and characteristic polynomial") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 4, 4, 7);
    CHECK(determinant(m) == oracle::det(m));
  }
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix(2, 3)) == 0);
  CHECK(characteristic_polynomial(phi) == std::vector<Integer>{1, -1, 1});
  CHECK(polynomial_to_string(characteristic_polynomial(phi)) == "x^2 - x + 1");
  CHECK(characteristic_polynomial(IntMatrix(0, 0)) == std::vector<Integer>{1});
}

TEST_CASE("matrix order") {
  CHECK(phi.pow(3) == -IntMatrix::identity(2));
  CHECK(matrix_order(phi) == MatrixOrder::finite(6));
  for (std::size_t n : {1, 2, 5}) CHECK(matrix_order(-IntMatrix::identity(n)) == MatrixOrder::finite(2));
  CHECK(matrix_order(IntMatrix{{1, 1}, {0, 1}}) == MatrixOrder::infinite());
  CHECK(matrix_order(IntMatrix{{1, 1}, {0, 1}}).to_string() == "Infinite");
  CHECK(matrix_order(IntMatrix(0, 0)) == MatrixOrder::finite(1));
  CHECK_THROWS_AS(matrix_order(IntMatrix::diagonal({2, 1})), InvariantError);
  CHECK_THROWS_AS(matrix_order(IntMatrix(2, 3)), InvariantError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix u = oracle::random_unimodular(rng, 4);
    // Conjugate phi + (-1) + 1 by u, then check minimality directly.
    IntMatrix m = direct_sum({phi, -IntMatrix::identity(1), IntMatrix::identity(1)});
    SmithForm s = smith_normal_form(u);  // u^{-1} = V U since D = I
    IntMatrix uinv = s.V * s.U;
    REQUIRE(u * uinv == IntMatrix::identity(4));
    IntMatrix c = u * m * uinv;
    MatrixOrder k = matrix_order(c);
    REQUIRE(k.is_finite());
    CHECK(k.value() == 6);
    CHECK(c.pow(k.value()).is_identity());
    for (std::uint64_t j = 1; j < k.value(); ++j) CHECK_FALSE(c.pow(j).is_identity());
  }
}

TEST_CASE("maximal torsion order in GL(n, Z)") {
  CHECK(max_torsion_order_gl(1) == 2);
  CHECK(max_torsion_order_gl(2) == 6);
  CHECK(max_torsion_order_gl(4) == 12);
  std::uint64_t prev = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(max_torsion_order_gl(n) == oracle::naive_max_order(n));
    CHECK(max_torsion_order_gl(n) >= prev);
    prev = max_torsion_order_gl(n);
  }
  for (unsigned n = 1; n <= 12; ++n) CHECK(euler_phi(n) == oracle::naive_phi(n));
}

TEST_CASE("extension abelianization") {
  for (unsigned n = 2; n <= 8; ++n) {
    IntMatrix m = direct_sum(phi, IntMatrix::identity(n - 2));
    CHECK(extension_abelianization(m, 6, IntVector(n, 0)) == FinGenAbGroup(n - 2, {6}));
  }
  CHECK(extension_abelianization(IntMatrix::identity(3), 1, IntVector(3, 0)) == FinGenAbGroup::free(3));

  // t^6 = e_1 with monodromy phi: by hand, phi - I is invertible so e_1 = 0
  // in the coinvariants and t has order 6.
  FinGenAbGroup g = extension_abelianization(phi, 6, IntVector{1, 0});
  CHECK(g == FinGenAbGroup::cyclic(6));
  auto by_minors = oracle::invariant_factors(IntMatrix{{-1, 1, -1}, {-1, 0, 0}, {0, 0, 6}});
  CHECK(by_minors == std::vector<Integer>{1, 1, 6});

  CHECK_THROWS_AS(extension_abelianization(phi, 4, IntVector{0, 0}), InvariantError);
}

TEST_CASE("symplectic form") {
  CHECK(is_symplectic(IntMatrix::identity(4)));
  CHECK(is_symplectic(phi));
  CHECK_FALSE(is_symplectic(IntMatrix::diagonal({2, 1})));
  CHECK_THROWS_AS(is_symplectic(IntMatrix::identity(3)), InvariantError);
  CHECK(symplectic_form(1) == IntMatrix{{0, 1}, {-1, 0}});
}

TEST_CASE("matrix text and json round trip") {
  const std::string text = "2 3\n1 -2 3\n40000000000000000000000 0 -7\n";
  IntMatrix m = read_text(text);
  CHECK(write_text(m) == text);
  CHECK(read_json(write_json(m)) == m);
  CHECK(read_matrix(write_json(m)) == m);
  CHECK(read_matrix("0 0\n") == IntMatrix(0, 0));
  CHECK(read_text(" 2 2 \n 1   0\n0 1") == IntMatrix::identity(2));
  CHECK_THROWS_AS(read_text("2 2\n1 0\n0"), ParseError);
  CHECK_THROWS_AS(read_text("2 2\n1 x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_json("{\"rows\": 1, \"cols\": 2, \"entries\": [[1]]}"), ParseError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix r = oracle::random_matrix(rng, 3, 3, 1000000);
    CHECK(read_text(write_text(r)) == r);
    CHECK(read_json(write_json(r)) == r);
  }
}
