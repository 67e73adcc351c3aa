#include "liftcheck/certificate.hpp"

#include <set>

#include "json_util.hpp"
#include "liftcheck/canonical.hpp"
#include "liftcheck/enumeration.hpp"
#include "liftcheck/error.hpp"

namespace liftcheck {

using detail::json;

std::string to_string(Verdict v) { return v == Verdict::NonLifting ? "NonLifting" : "SurvivorsFound"; }

namespace {

const char* outcome(bool pass) { return pass ? "pass" : "fail"; }

json polynomial_json(const std::vector<Integer>& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(detail::integer_to_json(c));
  return out;
}

json quotient_json(const QuotientTrace& t) {
  json j;
  const QuotientMap& f = t.quotient.representative;
  j["vertex_images"] = f.vertex_images;
  j["edge_images"] = f.edge_images;
  j["multiplicity"] = t.quotient.multiplicity;
  j["kernel_rank"] = t.kernel_rank;
  j["cover"] = {{"vertices", t.cover_vertices},
                {"edges", t.cover_edges},
                {"euler_characteristic", t.cover_euler_characteristic},
                {"h1_rank", t.cover_h1_rank}};
  j["action"] = detail::matrix_to_json(t.action);
  j["charpoly"] = polynomial_json(t.charpoly);
  j["fixed_rank"] = t.fixed_rank;
  j["coinvariants"] = t.coinvariants.to_string();
  j["filters"] = {{"abelianization", outcome(t.filters.abelianization)},
                  {"kernel_action", outcome(t.filters.kernel_action)},
                  {"effectiveness", outcome(t.filters.effective)}};
  j["survivor"] = t.filters.all();
  return j;
}

json candidate_json(const CandidateTrace& t) {
  json j;
  j["key"] = t.key;
  j["graph"] = json::parse(write_graph_json(t.graph));
  j["euler_characteristic"] = to_string(t.euler_characteristic);
  j["abelianization"] = t.abelianization.to_string();
  j["abelianization_form"] = outcome(t.abelianization_form);
  j["central_order"] = t.central_order;
  j["quotient_count"] = t.quotient_count;
  json qs = json::array();
  for (const auto& q : t.quotients) qs.push_back(quotient_json(q));
  j["quotients"] = std::move(qs);
  return j;
}

void diff(const json& recorded, const json& fresh, const std::string& path, ReplayReport& r) {
  if (recorded.is_object() && fresh.is_object()) {
    for (auto it = fresh.begin(); it != fresh.end(); ++it) {
      if (!recorded.contains(it.key())) {
        r.mismatches.push_back(path + "." + it.key() + ": missing from certificate");
        continue;
      }
      diff(recorded[it.key()], it.value(), path + "." + it.key(), r);
    }
    for (auto it = recorded.begin(); it != recorded.end(); ++it)
      if (!fresh.contains(it.key())) r.mismatches.push_back(path + "." + it.key() + ": unexpected field");
    return;
  }
  if (recorded.is_array() && fresh.is_array()) {
    if (recorded.size() != fresh.size()) {
      r.mismatches.push_back(path + ": recorded " + std::to_string(recorded.size()) + " entries, recomputed " +
                             std::to_string(fresh.size()));
      return;
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) diff(recorded[i], fresh[i], path + "[" + std::to_string(i) + "]", r);
    return;
  }
  ++r.checks;
  if (recorded != fresh) r.mismatches.push_back(path + ": recorded " + recorded.dump() + ", recomputed " + fresh.dump());
}

json header_json(const Certificate& c) {
  json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["problem"] = {{"rank", c.rank},
                  {"quotient_order", c.quotient_order},
                  {"target", detail::matrix_to_json(c.target)},
                  {"pruned", c.pruned}};
  Rational chi(1 - static_cast<long>(c.rank), static_cast<unsigned long>(c.quotient_order));
  chi.canonicalize();
  j["bounds"] = {{"euler_characteristic", to_string(chi)},
                 {"max_edges", c.max_edges},
                 {"max_vertices", c.max_vertices}};
  j["stats"] = {{"raw_graphs", c.stats.raw_graphs},
                {"candidates", c.stats.candidates},
                {"quotient_classes", c.stats.quotient_classes},
                {"max_edges_seen", c.stats.max_edges_seen},
                {"max_vertices_seen", c.stats.max_vertices_seen}};
  return j;
}

}  // namespace

std::string write_certificate(const Certificate& c) {
  json j = header_json(c);
  json cands = json::array();
  for (const auto& t : c.candidates) cands.push_back(candidate_json(t));
  j["candidates"] = std::move(cands);
  json surv = json::array();
  for (const auto& s : c.survivors) surv.push_back({{"key", s.key}, {"quotient_index", s.quotient_index}});
  j["survivors"] = std::move(surv);
  j["verdict"] = to_string(c.verdict);
  return j.dump(1) + "\n";
}

namespace {

ReplayReport replay(std::string_view text, bool re_enumerate, unsigned workers) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || !j.contains("problem") || !j.contains("candidates"))
    throw ParseError("certificate: missing schema_version, problem or candidates");
  if (j["schema_version"] != kCertificateSchemaVersion)
    throw ParseError("certificate: unsupported schema_version " + j["schema_version"].dump());

  ReplayReport r;
  const json& p = j["problem"];
  const long n = detail::small_int(p.at("rank"), "problem.rank");
  const long q = detail::small_int(p.at("quotient_order"), "problem.quotient_order");
  if (n < 2 || q < 1) throw ParseError("certificate: invalid rank or quotient order");
  Certificate header;
  header.rank = static_cast<unsigned>(n);
  header.quotient_order = static_cast<Order>(q);
  header.pruned = p.at("pruned").get<bool>();
  header.target = detail::matrix_from_json(p.at("target"));
  if (header.target.rows() != static_cast<std::size_t>(n) || header.target.cols() != static_cast<std::size_t>(n))
    throw ParseError("certificate: target size differs from rank");
  const TargetInvariants inv = target_invariants(header.target);
  header.max_edges = header.rank + header.quotient_order - 1;
  header.max_vertices = header.rank + header.quotient_order;
  Rational chi(1 - n, static_cast<unsigned long>(q));
  chi.canonicalize();

  const json& cands = j["candidates"];
  std::vector<Survivor> survivors;
  std::set<std::string> keys;
  std::string previous;
  std::size_t classes = 0, max_e = 0, max_v = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const std::string path = "candidates[" + std::to_string(i) + "]";
    const json& c = cands[i];
    GraphOfGroups g = read_graph_json(c.at("graph").dump());
    CanonicalForm form = canonical_form(g);
    ++r.checks;
    if (form.key != c.at("key").get<std::string>() || !(form.graph == g))
      r.mismatches.push_back(path + ": graph is not in canonical form for its key");
    ++r.checks;
    if (i > 0 && !(previous < form.key)) r.mismatches.push_back(path + ": keys not strictly increasing");
    previous = form.key;
    keys.insert(form.key);
    ++r.checks;
    if (!g.is_reduced()) r.mismatches.push_back(path + ": graph is not reduced");
    ++r.checks;
    if (euler_char(g) != chi) r.mismatches.push_back(path + ": Euler characteristic differs from (1-n)/q");
    for (Order m : g.vertex_orders()) {
      ++r.checks;
      if (static_cast<Order>(q) % m != 0) r.mismatches.push_back(path + ": vertex order does not divide q");
    }
    CandidateTrace t = evaluate_candidate(form, header.rank, header.quotient_order, inv);
    diff(c, candidate_json(t), path, r);
    // Raw quotient count, re-enumerated without class reduction when small.
    if (t.quotient_count <= 200000) {
      ++r.checks;
      if (torsion_free_quotients(g, header.quotient_order).size() != t.quotient_count)
        r.mismatches.push_back(path + ": raw quotient count differs from the class multiplicities");
    }
    classes += t.quotients.size();
    max_e = std::max(max_e, g.edge_count());
    max_v = std::max(max_v, g.vertex_count());
    for (std::size_t k = 0; k < t.quotients.size(); ++k)
      if (t.quotients[k].filters.all()) survivors.push_back({t.key, k});
  }

  header.stats.raw_graphs = j.at("stats").at("raw_graphs").get<std::uint64_t>();
  header.stats.candidates = cands.size();
  header.stats.quotient_classes = classes;
  header.stats.max_edges_seen = max_e;
  header.stats.max_vertices_seen = max_v;
  json fresh_header = header_json(header);
  for (const char* field : {"problem", "bounds", "stats"}) diff(j.at(field), fresh_header[field], field, r);

  json fresh_surv = json::array();
  for (const auto& s : survivors) fresh_surv.push_back({{"key", s.key}, {"quotient_index", s.quotient_index}});
  diff(j.at("survivors"), fresh_surv, "survivors", r);
  diff(j.at("verdict"), json(to_string(survivors.empty() ? Verdict::NonLifting : Verdict::SurvivorsFound)), "verdict", r);

  if (re_enumerate) {
    GraphEnumeration ge = enumerate_graphs(header.rank, header.quotient_order, header.pruned, workers);
    ++r.checks;
    if (ge.stats.raw_graphs != header.stats.raw_graphs)
      r.mismatches.push_back("stats.raw_graphs: regenerated " + std::to_string(ge.stats.raw_graphs));
    std::set<std::string> fresh_keys;
    for (const auto& f : ge.graphs) fresh_keys.insert(f.key);
    ++r.checks;
    if (fresh_keys != keys) r.mismatches.push_back("candidates: regenerated candidate set differs");
  }
  r.ok = r.mismatches.empty();
  return r;
}

}  // namespace

ReplayReport replay_certificate(std::string_view text, bool re_enumerate, unsigned workers) {
  try {
    return replay(text, re_enumerate, workers);
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace liftcheck
