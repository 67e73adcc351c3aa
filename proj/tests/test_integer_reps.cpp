#include <random>

#include "doctest.h"
#include "liftcheck/error.hpp"
#include "liftcheck/free_group.hpp"
#include "liftcheck/integer_reps.hpp"
#include "liftcheck/linalg.hpp"
#include "oracles.hpp"

using namespace liftcheck;

namespace {

IntMatrix cyclic_permutation(std::size_t p) {
  std::vector<std::size_t> images(p);
  for (std::size_t i = 0; i < p; ++i) images[i] = (i + 1) % p;
  return IntMatrix::permutation(images);
}

// Companion matrix of 1 + x + ... + x^{p-1}.
IntMatrix cyclotomic_companion(std::size_t p) {
  const std::size_t n = p - 1;
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 1; i < n; ++i) a[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) a[i][n - 1] = -1;
  return IntMatrix::from_rows(a);
}

IntMatrix conjugate(const IntMatrix& m, std::mt19937& rng) {
  IntMatrix u = oracle::random_unimodular(rng, m.rows());
  SmithForm s = smith_normal_form(u);
  return u * m * (s.V * s.U);
}

}  // namespace

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(25));
}

TEST_CASE("decomposition type") {
  CHECK(decomposition_type(cyclic_permutation(3), 3) == DecompositionType{3, 0, 0, 1});
  CHECK(decomposition_type(cyclic_permutation(3), 3).to_string() == "(a,b,c) = (0,0,1)");
  CHECK(decomposition_type(cyclotomic_companion(3), 3) == DecompositionType{3, 0, 1, 0});
  CHECK(decomposition_type(IntMatrix::identity(4), 5) == DecompositionType{5, 4, 0, 0});
  CHECK(decomposition_type(-IntMatrix::identity(3), 2) == DecompositionType{2, 0, 3, 0});
  CHECK(decomposition_type(direct_sum(cyclic_permutation(2), -IntMatrix::identity(1)), 2) ==
        DecompositionType{2, 0, 1, 1});

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = direct_sum({cyclic_permutation(5), cyclotomic_companion(5), IntMatrix::identity(2)});
    CHECK(decomposition_type(conjugate(m, rng), 5) == DecompositionType{5, 2, 1, 1});
  }

  CHECK_THROWS_AS(decomposition_type(IntMatrix(2, 3), 3), InvariantError);
  CHECK_THROWS_AS(decomposition_type(cyclic_permutation(4), 4), InvariantError);
  CHECK_THROWS_AS(decomposition_type(cyclic_permutation(3), 5), InvariantError);
}

TEST_CASE("standardness") {
  CHECK(is_standard(cyclic_permutation(3), 3) == Standardness::Standard);
  CHECK(is_standard(cyclotomic_companion(3), 3) == Standardness::Standard);
  CHECK(is_standard(IntMatrix::identity(3), 23) == Standardness::Standard);
  CHECK(is_standard(cyclic_permutation(23), 23) == Standardness::Standard);
  CHECK(is_standard(cyclotomic_companion(23), 23) == Standardness::Unknown);
  CHECK(to_string(Standardness::Unknown) == "Unknown");
}

TEST_CASE("graph realizations") {
  EquivariantGraph reg = build_graph_realization(DecompositionType{3, 0, 0, 1});
  CHECK(reg.graph().vertex_count == 1);
  CHECK(reg.graph().edges.size() == 3);
  CHECK(decomposition_type(induced_h1_action(reg), 3) == DecompositionType{3, 0, 0, 1});

  for (unsigned long p : {2ul, 3ul, 7ul}) {
    EquivariantGraph fixed = build_graph_realization(DecompositionType{p, 1, 0, 0});
    CHECK(induced_h1_action(fixed) == IntMatrix::identity(1));
  }
  CHECK(induced_h1_action(build_graph_realization(DecompositionType{5, 4, 0, 0})) == IntMatrix::identity(4));

  EquivariantGraph cyc = build_graph_realization(DecompositionType{3, 0, 1, 0});
  CHECK(cyc.graph().vertex_count == 2);
  CHECK(cyc.graph().edges.size() == 3);
  IntMatrix h = induced_h1_action(cyc);
  CHECK(characteristic_polynomial(h) == std::vector<Integer>{1, 1, 1});

  IntMatrix big = induced_h1_action(build_graph_realization(DecompositionType{5, 1, 1, 1}));
  CHECK(big.rows() == 10);
  CHECK(matrix_order(big) == MatrixOrder::finite(5));
  CHECK(decomposition_type(big, 5) == DecompositionType{5, 1, 1, 1});
}

TEST_CASE("free automorphism of a realization") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    EquivariantGraph g = build_graph_realization(DecompositionType{p, 1, 1, 1});
    FreeAutomorphism psi = induced_free_automorphism(g);
    CHECK(psi.pow(static_cast<long>(p)) == FreeAutomorphism::identity(psi.rank()));
    CHECK_FALSE(psi == FreeAutomorphism::identity(psi.rank()));
    CHECK(abelianize(psi) == induced_h1_action(g));
  }
}

TEST_CASE("equivariant graph validation and json") {
  OrientedGraph tri{1, {{0, 0}, {0, 0}, {0, 0}}};
  CHECK_NOTHROW(EquivariantGraph(tri, {0}, {1, 2, 0}, 0, 3));
  CHECK_THROWS_AS(EquivariantGraph(tri, {0}, {1, 0, 2}, 0, 3), InvariantError);  // order 2
  CHECK_THROWS_AS(EquivariantGraph(tri, {0}, {1, 2, 0}, 0, 4), InvariantError);
  CHECK_THROWS_AS(EquivariantGraph(tri, {0}, {1, 1, 0}, 0, 3), InvariantError);
  OrientedGraph two{2, {{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(EquivariantGraph(two, {1, 0}, {1, 0}, 0, 2), InvariantError);  // base moves

  EquivariantGraph g = build_graph_realization(DecompositionType{3, 1, 2, 1});
  EquivariantGraph back = read_equivariant_graph_json(write_equivariant_graph_json(g));
  CHECK(back.graph().vertex_count == g.graph().vertex_count);
  CHECK(back.graph().edges == g.graph().edges);
  CHECK(back.vertex_perm() == g.vertex_perm());
  CHECK(back.edge_perm() == g.edge_perm());
  CHECK(back.base() == g.base());
  CHECK(back.prime() == g.prime());
  CHECK_THROWS_AS(read_equivariant_graph_json("{}"), ParseError);
}

TEST_CASE("lift decision") {
  LiftDecision d = lift_decision(cyclic_permutation(3), 3);
  CHECK(d.lifts);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->graph.graph().vertex_count == 1);
  CHECK(d.type == DecompositionType{3, 0, 0, 1});

  std::mt19937 rng(17);
  IntMatrix m7 = conjugate(direct_sum({cyclotomic_companion(7), cyclic_permutation(7)}), rng);
  LiftDecision d7 = lift_decision(m7, 7);
  CHECK(d7.lifts);
  REQUIRE(d7.witness.has_value());
  CHECK(decomposition_type(abelianize(d7.witness->automorphism), 7) == d7.type);

  LiftDecision u = lift_decision(cyclotomic_companion(23), 23);
  CHECK_FALSE(u.lifts);
  CHECK_FALSE(u.witness.has_value());
  CHECK_FALSE(u.note.empty());

  CHECK_THROWS_AS(lift_decision(IntMatrix::identity(3), 3), InvariantError);
  CHECK_THROWS_AS(lift_decision(cyclic_permutation(3), 2), InvariantError);
}
