#pragma once

// Private helpers shared by the serializers. Not installed.

#include <limits>
#include <string>

#include "json.hpp"
#include "liftcheck/error.hpp"
#include "liftcheck/int_matrix.hpp"

namespace liftcheck::detail {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("integer: malformed decimal string");
    return x;
  }
  throw ParseError("integer: expected number or decimal string");
}

inline long small_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected integer");
  return j.get<long>();
}

inline const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing '" + key + "'");
  return j[key];
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix: expected object with rows, cols, entries");
  long r = small_int(j["rows"], "matrix.rows");
  long c = small_int(j["cols"], "matrix.cols");
  if (r < 0 || c < 0) throw ParseError("matrix: negative dimension");
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != static_cast<std::size_t>(r))
    throw ParseError("matrix: entries must have `rows` rows");
  std::vector<Integer> entries;
  entries.reserve(static_cast<std::size_t>(r * c));
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(c))
      throw ParseError("matrix: every row must have `cols` entries");
    for (const auto& x : row) entries.push_back(integer_from_json(x));
  }
  return IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c), std::move(entries));
}

}  // namespace liftcheck::detail
