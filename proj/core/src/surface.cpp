#include "liftcheck/surface.hpp"

#include <functional>
#include <numeric>

#include "liftcheck/error.hpp"
#include "liftcheck/linalg.hpp"

namespace liftcheck {

namespace {

void require_genus(unsigned g, const char* who) {
  if (g < 2) throw InvariantError(std::string(who) + ": genus must be >= 2");
}

constexpr unsigned kTwists[] = {1, 2, 3, 4, 6};

}  // namespace

std::uint64_t hurwitz_bound(unsigned g) {
  require_genus(g, "hurwitz_bound");
  return 84ULL * (g - 1);
}

std::uint64_t wiman_bound(unsigned g) {
  require_genus(g, "wiman_bound");
  return 4ULL * g + 2;
}

IntMatrix sl2_torsion(unsigned d) {
  switch (d) {
    case 1: return IntMatrix::identity(2);
    case 2: return IntMatrix{{-1, 0}, {0, -1}};
    case 3: return IntMatrix{{0, 1}, {-1, -1}};
    case 4: return IntMatrix{{0, 1}, {-1, 0}};
    case 6: return IntMatrix{{0, 1}, {-1, 1}};
    default: throw InvariantError("sl2_torsion: order " + std::to_string(d) + " is not one of 1, 2, 3, 4, 6");
  }
}

IntMatrix block_symplectic(const std::vector<IntMatrix>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].rows() != 2 || blocks[i].cols() != 2 || determinant(blocks[i]) != 1)
      throw InvariantError("block_symplectic: block " + std::to_string(i) + " must be 2x2 with determinant 1");
  }
  return direct_sum(blocks);
}

std::string to_string(ObstructionReport::Verdict v) {
  return v == ObstructionReport::Verdict::Obstructed ? "Obstructed" : "Inconclusive";
}

ObstructionReport lefschetz_obstruction(const IntMatrix& m, unsigned d) {
  if (d < 1) throw InvariantError("lefschetz_obstruction: order must be >= 1");
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || !is_symplectic(m))
    throw InvariantError("lefschetz_obstruction: matrix must be symplectic");
  if (!m.pow(d).is_identity()) throw InvariantError("lefschetz_obstruction: M^d != I");
  ObstructionReport r;
  IntMatrix power = IntMatrix::identity(m.rows());
  for (unsigned k = 1; k < d; ++k) {
    power = power * m;
    LefschetzWitness w{k, Integer(2) - power.trace()};
    if (w.value < 0) r.verdict = ObstructionReport::Verdict::Obstructed;
    r.lefschetz.push_back(std::move(w));
  }
  r.note = r.verdict == ObstructionReport::Verdict::Obstructed
               ? "a negative Lefschetz number rules out a periodic diffeomorphism"
               : "Lefschetz numbers are nonnegative; this test is only a necessary condition";
  return r;
}

SymplecticWitness twisted_block_permutation(const std::vector<TwistedCycle>& cycles) {
  std::size_t g = 0;
  std::uint64_t order = 1;
  for (const auto& c : cycles) {
    if (c.length == 0) throw InvariantError("twisted_block_permutation: empty cycle");
    sl2_torsion(c.twist);
    g += c.length;
    order = std::lcm(order, c.length * c.twist);
  }
  std::vector<Integer> e(4 * g * g);
  const std::size_t n = 2 * g;
  auto put = [&](std::size_t row_block, std::size_t col_block, const IntMatrix& b) {
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) e[(2 * row_block + r) * n + 2 * col_block + c] = b(r, c);
  };
  std::size_t start = 0;
  for (const auto& c : cycles) {
    // Block start+k goes to block start+k+1; the last returns twisted.
    for (std::size_t k = 0; k + 1 < c.length; ++k) put(start + k + 1, start + k, IntMatrix::identity(2));
    put(start, start + c.length - 1, sl2_torsion(c.twist));
    start += c.length;
  }
  return {IntMatrix(n, n, std::move(e)), order, cycles};
}

std::optional<SymplecticWitness> wiman_violation_symplectic(unsigned g) {
  require_genus(g, "wiman_violation_symplectic");
  std::vector<TwistedCycle> current, best;
  std::uint64_t best_order = 0;
  // Cycles in nonincreasing (length, twist) order, so each multiset is seen once.
  std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t left, std::uint64_t order) {
    if (left == 0) {
      if (order > best_order || (order == best_order && current < best)) {
        best_order = order;
        best = current;
      }
      return;
    }
    for (std::size_t len = 1; len <= left; ++len) {
      for (unsigned d : kTwists) {
        TwistedCycle c{len, d};
        if (!current.empty() && current.back() < c) continue;
        current.push_back(c);
        extend(left - len, std::lcm(order, len * d));
        current.pop_back();
      }
    }
  };
  extend(g, 1);
  if (best_order <= wiman_bound(g)) return std::nullopt;
  return twisted_block_permutation(best);
}

std::uint64_t free_action_genus(std::uint64_t m, std::uint64_t h) {
  if (m < 1) throw InvariantError("free_action_genus: m must be >= 1");
  if (h < 2) throw InvariantError("free_action_genus: base genus must be >= 2");
  return m * (h - 1) + 1;
}

std::optional<std::uint64_t> free_by_free_parameters(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 2) return std::nullopt;
  if ((n - 1) % m != 0) return std::nullopt;
  std::uint64_t np = (n - 1) / m + 1;
  if (np < 2) return std::nullopt;
  return np;
}

MaxOrderTable max_order_tables(unsigned n) {
  if (n < 2) throw InvariantError("max_order_tables: rank must be >= 2");
  MaxOrderTable t;
  t.n = n;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  if (n > 2) t.out_fn = two_n * fact;
  if (n > 3) t.out_fn_abelian = two_n;
  switch (n) {
    case 2: t.gl_exceptional = Integer(12); break;
    case 4: t.gl_exceptional = Integer(1152); break;
    case 6: t.gl_exceptional = Integer(51840); break;
    case 7: t.gl_exceptional = Integer(2903040); break;
    case 8: t.gl_exceptional = Integer(696729600); break;
    case 9:
    case 10: t.gl_note = "larger than 2^n n!, value not tabulated"; break;
    default: break;
  }
  return t;
}

}  // namespace liftcheck
