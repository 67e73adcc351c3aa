#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "liftcheck/liftcheck.hpp"

namespace liftcheck::cli {

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kSurvivors = 2;

unsigned default_workers() {
  if (const char* env = std::getenv("LIFTCHECK_WORKERS")) {
    char* end = nullptr;
    long w = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && w >= 1 && w <= 1024) return static_cast<unsigned>(w);
    throw ParseError("LIFTCHECK_WORKERS must be an integer in 1..1024");
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string list(const std::vector<Order>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

struct Config {
  unsigned rank = 0;
  unsigned genus = 0;
  unsigned long prime = 0;
  unsigned long order = 0;
  unsigned long quotient = 6;
  unsigned long base_genus = 0;
  unsigned workers = 1;
  bool no_prune = false;
  bool re_enumerate = false;
  std::string matrix_path;
  std::string cert_path;
  std::string graph_path;
};

int phi_nonlift(const Config& c, std::ostream& out) {
  Certificate cert = verify_phi_nonlift(c.rank, !c.no_prune, c.workers);
  if (!c.cert_path.empty()) write_file(c.cert_path, write_certificate(cert));
  out << "rank " << cert.rank << ", quotient Z_" << cert.quotient_order << (cert.pruned ? " (one-vertex search)" : " (full search)")
      << "\n";
  out << "graphs: " << cert.stats.candidates << " (raw " << cert.stats.raw_graphs << "), quotient classes: "
      << cert.stats.quotient_classes << ", survivors: " << cert.survivors.size() << "\n";
  for (const auto& s : cert.survivors) out << "survivor: " << s.key << " quotient " << s.quotient_index << "\n";
  out << "verdict: " << to_string(cert.verdict) << "\n";
  return cert.verdict == Verdict::NonLifting ? kOk : kSurvivors;
}

int lift(const Config& c, std::ostream& out) {
  IntMatrix m = read_matrix_file(c.matrix_path);
  LiftDecision d = lift_decision(m, c.prime);
  out << d.type.to_string() << "\n";
  out << "decision: " << (d.lifts ? "Lifts" : "Unknown") << " (" << d.note << ")\n";
  if (d.witness) {
    out << "witness graph: " << write_equivariant_graph_json(d.witness->graph) << "\n";
    out << "witness automorphism:\n" << write_automorphism(d.witness->automorphism);
  }
  if (!c.cert_path.empty()) {
    std::ostringstream doc;
    doc << "{\"schema_version\": " << kCertificateSchemaVersion << ", \"prime\": " << c.prime
        << ", \"matrix\": " << write_json(m) << ", \"type\": [" << d.type.a << ", " << d.type.b << ", " << d.type.c
        << "], \"decision\": \"" << (d.lifts ? "Lifts" : "Unknown") << "\"";
    if (d.witness) {
      doc << ", \"witness\": {\"graph\": " << write_equivariant_graph_json(d.witness->graph) << ", \"images\": [";
      const auto& img = d.witness->automorphism.images();
      for (std::size_t i = 0; i < img.size(); ++i) doc << (i ? ", " : "") << "\"" << img[i].to_string() << "\"";
      doc << "], \"abelianization\": " << write_json(abelianize(d.witness->automorphism)) << "}";
    }
    doc << "}\n";
    write_file(c.cert_path, doc.str());
  }
  return kOk;
}

int gog_check(const Config& c, std::ostream& out) {
  GraphOfGroups g = read_graph_file(c.graph_path);
  out << "euler characteristic: " << to_string(euler_char(g)) << "\n";
  out << "reduced: " << (g.is_reduced() ? "yes" : "no") << "\n";
  GraphOfGroups r = reduce(g);
  out << "reduced form: " << write_graph_json(r) << "\n";
  out << "canonical key: " << canonical_key(r) << "\n";
  out << "abelianization: " << abelianization(g).to_string() << "\n";
  out << "central vertex subgroup: " << central_vertex_subgroup(g) << "\n";
  const Order q = c.quotient;
  auto classes = torsion_free_quotient_classes(g, q);
  std::uint64_t raw = 0;
  for (const auto& k : classes) raw += k.multiplicity;
  out << "torsion-free quotients onto Z_" << q << ": " << raw << " (" << classes.size() << " classes)\n";
  if (!classes.empty()) out << "kernel rank: " << kernel_rank(g, q) << "\n";
  for (const auto& k : classes) {
    const auto& f = k.representative;
    IntMatrix action = induced_kernel_action(g, f);
    out << "  x -> " << list(f.vertex_images) << ", t -> " << list(f.edge_images) << " (x" << k.multiplicity
        << "), action charpoly " << polynomial_to_string(characteristic_polynomial(action)) << ", effective "
        << (is_effective(g, f).effective ? "yes" : "no") << "\n";
  }
  return kOk;
}

int gog_enumerate(const Config& c, std::ostream& out) {
  std::uint64_t count = 0;
  for_each_raw_graph(c.rank, c.quotient, !c.no_prune, [&](const GraphOfGroups& g) {
    out << write_graph_json(g) << "\n";
    ++count;
  });
  out << "# " << count << " raw graphs\n";
  return kOk;
}

int surface_bounds(const Config& c, std::ostream& out) {
  out << "hurwitz: " << hurwitz_bound(c.genus) << "\n";
  out << "wiman: " << wiman_bound(c.genus) << "\n";
  return kOk;
}

int surface_symplectic(const Config& c, std::ostream& out) {
  auto w = wiman_violation_symplectic(c.genus);
  if (!w) {
    out << "no twisted block permutation exceeds the Wiman bound " << wiman_bound(c.genus) << "\n";
    return kOk;
  }
  out << "order: " << w->order << " > wiman " << wiman_bound(c.genus) << "\n";
  out << "cycles:";
  for (const auto& cy : w->cycles) out << " (length " << cy.length << ", twist " << cy.twist << ")";
  out << "\nsymplectic: " << (is_symplectic(w->matrix) ? "yes" : "no") << "\n";
  out << "matrix order: " << matrix_order(w->matrix).to_string() << "\n";
  out << write_text(w->matrix);
  return kOk;
}

int surface_lefschetz(const Config& c, std::ostream& out) {
  IntMatrix m = read_matrix_file(c.matrix_path);
  ObstructionReport r = lefschetz_obstruction(m, static_cast<unsigned>(c.order));
  for (const auto& w : r.lefschetz) out << "L_" << w.power << " = " << w.value << "\n";
  out << "verdict: " << to_string(r.verdict) << " (" << r.note << ")\n";
  return kOk;
}

int surface_free_action(const Config& c, std::ostream& out) {
  std::uint64_t g = free_action_genus(c.order, c.base_genus);
  out << "genus: " << g << "\n";
  return kOk;
}

int outfn_witness(const Config& c, std::ostream& out) {
  FreeAutomorphism psi = conjugation_witness(static_cast<unsigned>(c.order));
  out << write_automorphism(psi);
  return kOk;
}

int bounds(const Config& c, std::ostream& out) {
  MaxOrderTable t = max_order_tables(c.rank);
  out << "rank: " << t.n << "\n";
  if (t.out_fn) out << "out_fn: " << *t.out_fn << "\n";
  if (t.out_fn_abelian) out << "out_fn_abelian: " << *t.out_fn_abelian << "\n";
  if (t.gl_exceptional) out << "gl_exceptional: " << *t.gl_exceptional << "\n";
  if (!t.gl_note.empty()) out << "gl_exceptional: " << t.gl_note << "\n";
  out << "max_cyclic_gl: " << max_torsion_order_gl(c.rank) << "\n";
  return kOk;
}

int verify(const Config& c, std::ostream& out) {
  ReplayReport r = replay_certificate(read_file(c.cert_path), c.re_enumerate, c.workers);
  for (const auto& m : r.mismatches) out << "mismatch: " << m << "\n";
  out << (r.ok ? "replay ok" : "replay FAILED") << ": " << r.checks << " checks, " << r.mismatches.size()
      << " mismatches\n";
  return r.ok ? kOk : kBadInput;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for lifting finite cyclic subgroups of outer automorphism groups"};
  app.require_subcommand(1);
  Config c;
  std::function<int()> action;
  auto workers_opt = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads (default: LIFTCHECK_WORKERS or 1)")
        ->check(CLI::Range(1, 1024));
  };

  auto* phi = app.add_subcommand("phi-nonlift", "Exhaustive search for a lift of phi + I to Aut F_n");
  phi->add_option("--rank", c.rank, "Rank n >= 3")->required()->check(CLI::Range(3, 64));
  phi->add_flag("--no-prune", c.no_prune, "Search all reduced graphs, not only one vertex of order 6");
  phi->add_option("--cert", c.cert_path, "Write the certificate here");
  workers_opt(phi);
  phi->callback([&] { action = [&] { return phi_nonlift(c, out); }; });

  auto* lf = app.add_subcommand("lift", "Lift decision for a matrix of prime order");
  lf->add_option("--matrix", c.matrix_path, "Matrix file")->required();
  lf->add_option("--prime", c.prime, "Prime p")->required();
  lf->add_option("--cert", c.cert_path, "Write the decision and witness here");
  lf->callback([&] { action = [&] { return lift(c, out); }; });

  auto* rep = app.add_subcommand("rep", "Integer representations of Z_p");
  rep->require_subcommand(1);
  auto* dec = rep->add_subcommand("decompose", "Trivial, cyclotomic and regular multiplicities");
  dec->add_option("--matrix", c.matrix_path, "Matrix file")->required();
  dec->add_option("--prime", c.prime, "Prime p")->required();
  dec->callback([&] {
    action = [&] {
      out << decomposition_type(read_matrix_file(c.matrix_path), c.prime).to_string() << "\n";
      return kOk;
    };
  });

  auto* gog = app.add_subcommand("gog", "Graphs of finite cyclic groups");
  gog->require_subcommand(1);
  auto* check = gog->add_subcommand("check", "Invariants and torsion-free cyclic quotients of a graph file");
  check->add_option("file", c.graph_path, "Graph of groups (JSON)")->required();
  check->add_option("--quotient", c.quotient, "Quotient order q")->check(CLI::Range(1, 1000));
  check->callback([&] { action = [&] { return gog_check(c, out); }; });
  auto* en = gog->add_subcommand("enumerate", "Stream every generated candidate graph, one JSON per line");
  en->add_option("--rank", c.rank, "Kernel rank n")->required()->check(CLI::Range(2, 64));
  en->add_option("--quotient", c.quotient, "Quotient order q")->required()->check(CLI::Range(1, 1000));
  en->add_flag("--no-prune", c.no_prune, "All reduced graphs, not only one vertex of order q");
  en->callback([&] { action = [&] { return gog_enumerate(c, out); }; });

  auto* surf = app.add_subcommand("surface", "Surface mapping class arithmetic");
  surf->require_subcommand(1);
  auto* sb = surf->add_subcommand("bounds", "Hurwitz and Wiman bounds");
  sb->add_option("--genus", c.genus, "Genus g >= 2")->required();
  sb->callback([&] { action = [&] { return surface_bounds(c, out); }; });
  auto* sn = surf->add_subcommand("symplectic-nonlift", "Symplectic torsion above the Wiman bound");
  sn->add_option("--genus", c.genus, "Genus g >= 2")->required()->check(CLI::Range(2, 40));
  sn->callback([&] { action = [&] { return surface_symplectic(c, out); }; });
  auto* sl = surf->add_subcommand("lefschetz", "Lefschetz numbers of the powers of a symplectic matrix");
  sl->add_option("--matrix", c.matrix_path, "Matrix file")->required();
  sl->add_option("--order", c.order, "Order d with M^d = I")->required()->check(CLI::Range(1, 100000));
  sl->callback([&] { action = [&] { return surface_lefschetz(c, out); }; });
  auto* sf = surf->add_subcommand("free-action", "Genus of a free cyclic cover");
  sf->add_option("--order", c.order, "Order m")->required();
  sf->add_option("--base-genus", c.base_genus, "Base genus h >= 2")->required();
  sf->callback([&] { action = [&] { return surface_free_action(c, out); }; });

  auto* outfn = app.add_subcommand("outfn", "Explicit elements of Out F_n");
  outfn->require_subcommand(1);
  auto* wit = outfn->add_subcommand("witness", "Conjugation-induced automorphism of order m in Out F_{m+1}");
  wit->add_option("--order", c.order, "Order m >= 2")->required()->check(CLI::Range(2, 1000));
  wit->callback([&] { action = [&] { return outfn_witness(c, out); }; });

  auto* bd = app.add_subcommand("bounds", "Maximal finite subgroup orders");
  bd->add_option("--rank", c.rank, "Rank n >= 2")->required()->check(CLI::Range(2, 1000));
  bd->callback([&] { action = [&] { return bounds(c, out); }; });

  auto* ver = app.add_subcommand("verify", "Replay a certificate");
  ver->add_option("--cert", c.cert_path, "Certificate file")->required();
  ver->add_flag("--re-enumerate", c.re_enumerate, "Also regenerate the candidate list");
  workers_opt(ver);
  ver->callback([&] { action = [&] { return verify(c, out); }; });

  try {
    c.workers = default_workers();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  try {
    return action ? action() : kBadInput;
  } catch (const InvariantError& e) {
    err << "error: invalid input: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << "\n";
  }
  return kBadInput;
}

}  // namespace liftcheck::cli
