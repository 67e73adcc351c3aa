#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "liftcheck/liftcheck.hpp"
#include "oracles.hpp"

using namespace liftcheck;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const IntMatrix phi{{0, 1}, {-1, 1}};

const CandidateTrace* find_candidate(const Certificate& c, const std::string& key) {
  for (const auto& t : c.candidates)
    if (t.key == key) return &t;
  return nullptr;
}

void ac1(Outcome& o) {
  const double limit = 600.0;
  for (unsigned n = 3; n <= 6; ++n) {
    for (bool prune : {true, false}) {
      const std::string tag = "n=" + std::to_string(n) + (prune ? "" : " full");
      auto t0 = std::chrono::steady_clock::now();
      Certificate c = verify_phi_nonlift(n, prune);
      const double secs = seconds_since(t0);
      o.require(c.verdict == Verdict::NonLifting && c.survivors.empty(), tag + " has survivors");
      o.require(secs <= limit, tag + " exceeded the time limit");
      ReplayReport r = replay_certificate(write_certificate(c), true);
      o.require(r.ok, tag + " replay failed" + (r.mismatches.empty() ? "" : ": " + r.mismatches.front()));
      if (prune || n == 6) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s %zu graphs %.2fs replay %zu checks", tag.c_str(), c.candidates.size(), secs,
                      r.checks);
        if (o.pass) o.detail << buf << "; ";
      }
      if (n == 5) {
        for (const char* key : {"6|0-0:2:1,0-0:6:1,0-0:6:1", "6|0-0:3:1,0-0:3:1,0-0:6:1"}) {
          const CandidateTrace* t = find_candidate(c, key);
          if (!t) {
            o.fail(tag + " trace lacks " + key);
            continue;
          }
          o.require(!t->quotients.empty(), std::string(key) + " has no quotients");
          for (const auto& q : t->quotients)
            o.require(!q.filters.effective, std::string(key) + " passes the effectiveness filter");
        }
      }
    }
  }
}

void ac2(Outcome& o) {
  std::mt19937 rng(2);
  std::size_t cases = 0, lifts = 0;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (std::size_t c = 0; c * p <= 12; ++c) {
      for (std::size_t b = 0; c * p + b * (p - 1) <= 12; ++b) {
        for (std::size_t a = 0; c * p + b * (p - 1) + a <= 12; ++a) {
          DecompositionType d{p, a, b, c};
          if (d.rank() == 0) continue;
          ++cases;
          const std::string tag = "p=" + std::to_string(p) + " " + d.to_string();
          EquivariantGraph g = build_graph_realization(d);
          IntMatrix m = induced_h1_action(g);
          o.require(decomposition_type(m, p) == d, tag + " round trip");
          if (b == 0 && c == 0) {
            o.require(m.is_identity(), tag + " not trivial");
            continue;
          }
          o.require(matrix_order(m) == MatrixOrder::finite(p), tag + " order");
          // Also decide a disguised copy of the same lattice.
          IntMatrix u = oracle::random_unimodular(rng, m.rows());
          SmithForm s = smith_normal_form(u);
          for (const IntMatrix& x : {m, IntMatrix(u * m * (s.V * s.U))}) {
            LiftDecision dec = lift_decision(x, p);
            if (!dec.lifts || !dec.witness) {
              o.fail(tag + " did not lift");
              continue;
            }
            const FreeAutomorphism& psi = dec.witness->automorphism;
            IntMatrix ab = abelianize(psi);
            o.require(decomposition_type(ab, p) == d, tag + " witness type");
            o.require(matrix_order(ab) == MatrixOrder::finite(p), tag + " witness order");
            o.require(psi.pow(static_cast<long>(p)) == FreeAutomorphism::identity(psi.rank()), tag + " witness psi^p");
            o.require(psi.rank() == x.rows(), tag + " witness rank");
            ++lifts;
          }
        }
      }
    }
  }
  if (o.pass) o.detail << cases << " types round-tripped, " << lifts << " lifts verified";
}

void ac3(Outcome& o) {
  std::mt19937 rng(500);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  const int trials = 600;
  for (int t = 0; t < trials; ++t) {
    IntMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), 50);
    if (t % 7 == 0 && m.rows() > 1) {
      // Force rank deficiency now and then.
      std::vector<Integer> e(m.entries().begin(), m.entries().end());
      for (std::size_t j = 0; j < m.cols(); ++j) e[(m.rows() - 1) * m.cols() + j] = 2 * m(0, j);
      m = IntMatrix(m.rows(), m.cols(), e);
    }
    SmithForm s = smith_normal_form(m);
    const std::string tag = "trial " + std::to_string(t);
    o.require(s.U * m * s.V == s.D, tag + " U M V != D");
    o.require(abs(oracle::det(s.U)) == 1 && abs(oracle::det(s.V)) == 1, tag + " not unimodular");
    const std::size_t k = std::min(m.rows(), m.cols());
    bool diag = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i != j && s.D(i, j) != 0) diag = false;
    o.require(diag, tag + " D not diagonal");
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const Integer& x = s.D(i, i);
      const Integer& y = s.D(i + 1, i + 1);
      o.require(x == 0 ? y == 0 : mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) != 0, tag + " chain");
    }
    if (std::max(m.rows(), m.cols()) <= 5) {
      auto expect = oracle::invariant_factors(m);
      for (std::size_t i = 0; i < k; ++i) o.require(abs(s.D(i, i)) == abs(expect[i]), tag + " invariant factors");
    }
  }
  if (o.pass) o.detail << trials << " random matrices";
}

void ac4(Outcome& o) {
  for (unsigned n = 2; n <= 8; ++n) {
    IntMatrix m = direct_sum(phi, IntMatrix::identity(n - 2));
    o.require(extension_abelianization(m, 6, IntVector(n, 0)) == FinGenAbGroup(n - 2, {6}),
              "n=" + std::to_string(n) + " untwisted");
  }
  // t^6 = a with a in the fixed sublattice; the only relation beyond the
  // free part is 6t = a, so the torsion is Z_gcd(6, content(a)).
  std::set<long> seen;
  std::size_t variants = 0;
  for (unsigned n = 3; n <= 5; ++n) {
    const std::size_t free = n - 2;
    std::vector<long> a(free, 0);
    for (;;) {
      IntVector vec(n, 0);
      long content = 0;
      for (std::size_t i = 0; i < free; ++i) {
        vec[2 + i] = a[i];
        content = std::gcd(content, a[i]);
      }
      const long expect = std::gcd(6L, content);
      FinGenAbGroup g = extension_abelianization(direct_sum(phi, IntMatrix::identity(free)), 6, vec);
      const std::vector<Integer> tors = expect == 1 ? std::vector<Integer>{} : std::vector<Integer>{expect};
      o.require(g == FinGenAbGroup(free, tors), "n=" + std::to_string(n) + " cocycle " + g.to_string());
      seen.insert(g.torsion().empty() ? 1L : g.torsion().front().get_si());
      ++variants;
      std::size_t k = 0;
      const long top = free == 1 ? 12 : 6;
      while (k < free && ++a[k] > top) a[k++] = free == 1 ? -12 : -2;
      if (k == free) break;
    }
  }
  o.require(seen == std::set<long>{1, 2, 3, 6}, "torsion set differs from {1, 2, 3, 6}");
  if (o.pass) o.detail << "n=2..8 untwisted, " << variants << " cocycles, torsion orders {1,2,3,6}";
}

void ac5(Outcome& o) {
  for (unsigned m = 2; m <= 6; ++m) {
    FreeAutomorphism psi = conjugation_witness(m);
    FreeWord z = FreeWord::generator(m + 1, m + 1);
    o.require(psi.pow(m) == FreeAutomorphism::conjugation(z), "m=" + std::to_string(m) + " psi^m");
    o.require(is_inner(psi.pow(m), z), "m=" + std::to_string(m) + " inner");
    o.require(matrix_order(abelianize(psi)) == MatrixOrder::finite(m), "m=" + std::to_string(m) + " order");
  }
  if (o.pass) o.detail << "m=2..6";
}

void ac6(Outcome& o) {
  std::size_t graphs = 0, quotients = 0;
  for (unsigned n = 3; n <= 5; ++n) {
    GraphEnumeration all = enumerate_graphs(n, 6, false);
    for (const auto& cf : all.graphs) {
      ++graphs;
      const Rational chi = euler_char(cf.graph);
      for (const auto& cls : torsion_free_quotient_classes(cf.graph, 6)) {
        ++quotients;
        CoverGraph c = covering_graph(cf.graph, cls.representative);
        o.require(Rational(c.euler_characteristic()) == 6 * chi, cf.key + " cover chi");
        o.require(Rational(static_cast<long>(c.h1_rank())) == 1 - 6 * chi, cf.key + " cover rank");
      }
    }
  }
  if (o.pass) o.detail << graphs << " graphs, " << quotients << " quotient classes";
}

void ac7(Outcome& o) {
  IntMatrix twelve = block_symplectic({sl2_torsion(3), sl2_torsion(4)});
  o.require(is_symplectic(twelve), "order-12 element not symplectic");
  o.require(matrix_order(twelve) == MatrixOrder::finite(12), "order-12 element has the wrong order");
  o.require(12 > wiman_bound(2) && wiman_bound(2) == 10, "Wiman bound at g=2");
  for (unsigned g = 2; g <= 10; ++g) {
    ObstructionReport r = lefschetz_obstruction(direct_sum(phi, IntMatrix::identity(2 * g - 2)), 6);
    o.require(r.verdict == ObstructionReport::Verdict::Obstructed, "g=" + std::to_string(g) + " not obstructed");
    o.require(!r.lefschetz.empty() && r.lefschetz[0].value == 3 - 2 * static_cast<long>(g),
              "g=" + std::to_string(g) + " L_1");
  }
  Integer fact = 1;
  for (unsigned g = 2; g <= 12; ++g) {
    fact *= g;
    Integer u = fact;
    for (unsigned i = 0; i < g; ++i) u *= 12;
    o.require(u > Integer(hurwitz_bound(g)), "g=" + std::to_string(g) + " 12^g g!");
  }
  if (o.pass) o.detail << "order 12 > 10, L_1 = 3-2g for g=2..10, 12^g g! > 84(g-1) for g=2..12";
}

void ac8(Outcome& o) {
  Integer fact = 2;
  for (unsigned n = 3; n <= 8; ++n) {
    fact *= n;
    MaxOrderTable t = max_order_tables(n);
    o.require(t.out_fn && *t.out_fn == (Integer(1) << n) * fact, "n=" + std::to_string(n) + " out_fn");
  }
  const std::pair<unsigned, long> weyl[] = {{2, 12}, {4, 1152}, {6, 51840}, {7, 2903040}, {8, 696729600}};
  for (auto [n, order] : weyl) {
    MaxOrderTable t = max_order_tables(n);
    o.require(t.gl_exceptional && *t.gl_exceptional == order, "n=" + std::to_string(n) + " exceptional");
  }
  for (unsigned n : {3u, 5u}) o.require(!max_order_tables(n).gl_exceptional, "n=" + std::to_string(n) + " spurious");
  if (o.pass) o.detail << "out_fn n=3..8, five exceptional orders";
}

std::set<std::string> survivor_keys(const Certificate& c) {
  std::set<std::string> out;
  for (const auto& s : c.survivors) out.insert(s.key + "#" + std::to_string(s.quotient_index));
  return out;
}

void ac9(Outcome& o) {
  for (unsigned n = 3; n <= 5; ++n) {
    Certificate pruned = verify_phi_nonlift(n, true), full = verify_phi_nonlift(n, false);
    o.require(survivor_keys(pruned) == survivor_keys(full), "n=" + std::to_string(n) + " survivor sets differ");
    o.require(pruned.verdict == full.verdict, "n=" + std::to_string(n) + " verdicts differ");
    if (o.pass)
      o.detail << "n=" << n << " " << pruned.candidates.size() << "/" << full.candidates.size() << " graphs, "
               << survivor_keys(full).size() << " survivors; ";
  }
}

void ac10(Outcome& o) {
  std::size_t bytes = 0;
  for (unsigned n = 3; n <= 6; ++n) {
    for (bool prune : {true, false}) {
      std::string one = write_certificate(verify_phi_nonlift(n, prune, 1));
      std::string eight = write_certificate(verify_phi_nonlift(n, prune, 8));
      o.require(one == eight, "n=" + std::to_string(n) + (prune ? "" : " full") + " certificates differ");
      bytes += one.size();
    }
  }
  if (o.pass) o.detail << "n=3..6 pruned and full, " << bytes << " bytes compared";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
