#include <algorithm>
#include <random>

#include "doctest.h"
#include "liftcheck/error.hpp"
#include "liftcheck/free_group.hpp"
#include "liftcheck/linalg.hpp"

using namespace liftcheck;

namespace {

FreeWord w(std::size_t rank, std::vector<Letter> letters) { return FreeWord(rank, std::move(letters)); }

// Cancels adjacent inverse pairs in a random order until none remain.
std::vector<Letter> random_schedule_reduce(std::vector<Letter> x, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] == -x[i + 1]) spots.push_back(i);
    if (spots.empty()) return x;
    std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

// Elementary Nielsen moves on F_n with explicit inverses.
FreeAutomorphism nielsen(std::size_t n, int kind, std::size_t i, std::size_t j) {
  std::vector<FreeWord> img, inv;
  for (std::size_t k = 1; k <= n; ++k) {
    img.push_back(FreeWord::generator(n, k));
    inv.push_back(FreeWord::generator(n, k));
  }
  const Letter a = static_cast<Letter>(i), b = static_cast<Letter>(j);
  switch (kind) {
    case 0:  // x_i -> x_i x_j
      img[i - 1] = w(n, {a, b});
      inv[i - 1] = w(n, {a, -b});
      break;
    case 1:  // x_i -> x_j x_i
      img[i - 1] = w(n, {b, a});
      inv[i - 1] = w(n, {-b, a});
      break;
    case 2:  // x_i -> x_i^-1
      img[i - 1] = w(n, {-a});
      inv[i - 1] = w(n, {-a});
      break;
    default:  // swap
      std::swap(img[i - 1], img[j - 1]);
      std::swap(inv[i - 1], inv[j - 1]);
  }
  return FreeAutomorphism(img, inv);
}

FreeAutomorphism random_automorphism(std::size_t n, std::mt19937& rng, int moves) {
  FreeAutomorphism a = FreeAutomorphism::identity(n);
  std::uniform_int_distribution<std::size_t> gen(1, n);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int m = 0; m < moves; ++m) {
    std::size_t i = gen(rng), j = gen(rng);
    if (i == j) continue;
    a = compose(nielsen(n, kind(rng), i, j), a);
  }
  return a;
}

// All reduced words of length <= len over rank n.
std::vector<FreeWord> short_words(std::size_t n, std::size_t len) {
  std::vector<FreeWord> out{FreeWord(n, {})};
  std::vector<FreeWord> layer = out;
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<FreeWord> next;
    for (const auto& u : layer) {
      for (Letter x = -static_cast<Letter>(n); x <= static_cast<Letter>(n); ++x) {
        if (x == 0 || (!u.empty() && u.letters().back() == -x)) continue;
        auto letters = u.letters();
        letters.push_back(x);
        next.emplace_back(n, letters);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce(2, {1, -1}).empty());
  CHECK(reduce(2, {1, 2, -2, 1}).letters() == std::vector<Letter>{1, 1});
  CHECK(reduce(2, {2, -1, 1, -2}).empty());
  CHECK_THROWS_AS(reduce(2, {3}), InvariantError);
  CHECK_THROWS_AS(reduce(2, {0}), InvariantError);
  CHECK(parse_word(3, " 1 -2  3 ").letters() == std::vector<Letter>{1, -2, 3});
  CHECK_THROWS_AS(parse_word(3, "1 b"), ParseError);
}

TEST_CASE("free reduction is independent of the cancellation order") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> letter(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> raw;
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, 24)(rng);
    while (raw.size() < len) {
      int x = letter(rng);
      if (x != 0) raw.push_back(x);
    }
    FreeWord r = reduce(3, raw);
    CHECK(r.letters() == random_schedule_reduce(raw, rng));
    CHECK(reduce(3, r.letters()) == r);
  }
}

TEST_CASE("apply, compose and inverse") {
  const std::size_t n = 3;
  FreeAutomorphism id = FreeAutomorphism::identity(n);
  FreeWord x = w(n, {1, -2, 3, 3});
  CHECK(id.apply(x) == x);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    FreeAutomorphism a = random_automorphism(n, rng, 6);
    CHECK(compose(a, a.inverse()).images() == id.images());
    CHECK(compose(a.inverse(), a).images() == id.images());
    FreeAutomorphism b = random_automorphism(n, rng, 6);
    CHECK(compose(a, b).apply(x) == a.apply(b.apply(x)));
  }
  CHECK_THROWS_AS(compose(id, FreeAutomorphism::identity(2)), InvariantError);
  CHECK_THROWS_AS(id.apply(w(2, {1})), InvariantError);
  // Not invertible: x1 -> x1^2.
  CHECK_THROWS_AS(FreeAutomorphism({w(1, {1, 1})}, {w(1, {1})}), InvariantError);
}

TEST_CASE("abelianization is a homomorphism") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    FreeAutomorphism a = random_automorphism(n, rng, 8), b = random_automorphism(n, rng, 8);
    CHECK(abelianize(compose(a, b)) == abelianize(a) * abelianize(b));
    Integer d = determinant(abelianize(a));
    CHECK((d == 1 || d == -1));
  }
  CHECK(abelianize(FreeAutomorphism::identity(4)) == IntMatrix::identity(4));
  CHECK(abelianize(FreeAutomorphism::conjugation(w(3, {1, -2, 3}))) == IntMatrix::identity(3));
}

TEST_CASE("inner automorphisms") {
  CHECK(is_inner(FreeAutomorphism::identity(2), FreeWord(2, {})));
  FreeWord a = FreeWord::generator(2, 1);
  CHECK(is_inner(FreeAutomorphism::conjugation(a), a));
  FreeAutomorphism psi = conjugation_witness(2);
  for (const auto& u : short_words(3, 3)) CHECK_FALSE(is_inner(psi, u));
}

TEST_CASE("conjugation witness") {
  FreeAutomorphism psi = conjugation_witness(2);
  const FreeWord b0 = FreeWord::generator(3, 1), b1 = FreeWord::generator(3, 2), z = FreeWord::generator(3, 3);
  CHECK(psi.apply(b0) == b1);
  CHECK(psi.apply(b1) == z * b0 * z.inverse());
  CHECK(psi.apply(z) == z);
  CHECK(abelianize(psi) == IntMatrix::permutation({1, 0, 2}));
  CHECK(matrix_order(abelianize(psi)) == MatrixOrder::finite(2));
  CHECK(is_inner(psi.pow(2), z));

  for (unsigned m = 2; m <= 6; ++m) {
    FreeAutomorphism p = conjugation_witness(m);
    CHECK(p.rank() == m + 1);
    FreeWord zm = FreeWord::generator(m + 1, m + 1);
    CHECK(is_inner(p.pow(m), zm));
    for (std::size_t i = 1; i <= m + 1; ++i) {
      FreeWord x = FreeWord::generator(m + 1, i);
      CHECK(p.pow(m).apply(x) == zm * x * zm.inverse());
    }
    CHECK(matrix_order(abelianize(p)) == MatrixOrder::finite(m));
    for (unsigned k = 1; k < m; ++k) CHECK_FALSE(abelianize(p.pow(k)).is_identity());
  }
  CHECK(matrix_order(abelianize(conjugation_witness(3))) == MatrixOrder::finite(3));
  CHECK_THROWS_AS(conjugation_witness(1), InvariantError);
}

TEST_CASE("automorphism file round trip") {
  FreeAutomorphism psi = conjugation_witness(3);
  std::string text = write_automorphism(psi);
  FreeAutomorphism back = read_automorphism(text);
  CHECK(back == psi);
  CHECK(write_automorphism(back) == text);
  CHECK_THROWS_AS(read_automorphism("1\n"), ParseError);
  CHECK_THROWS_AS(read_automorphism("1 1\n1\n"), InvariantError);
}
