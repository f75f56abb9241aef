#pragma once

#include <json.hpp>

#include <string>

#include "eulab/mpoly.hpp"

namespace eulab {

// Wire format for polynomials:
//   {"terms":[{"coeff":"-3/2","exps":{"x":2,"u2":-1}}, ...]}
// Terms are emitted in ascending graded-lex order and exponent keys in
// canonical variable order, so serialization is deterministic byte-for-byte.
using Json = nlohmann::ordered_json;

inline Json mpoly_to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, ex] : m.entries()) exps[var_name(v)] = ex;
    terms.push_back(Json{{"coeff", rational_to_string(c)}, {"exps", std::move(exps)}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline std::string mpoly_to_json_string(const MPoly& p) { return mpoly_to_json(p).dump(); }

inline MPoly mpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON must be an object with a 'terms' array");
  MPoly p;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t["exps"].is_object())
      throw ParseError("polynomial term must carry 'coeff' and an 'exps' object");
    Rational c = rational_from_string(t["coeff"].get<std::string>());
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, ex] : t["exps"].items()) {
      if (!ex.is_number_integer()) throw ParseError("exponent of '" + name + "' must be an integer");
      entries.emplace_back(var_index(name), ex.get<int>());
    }
    p.add_term(Monomial::from_entries(std::move(entries)), c);
  }
  return p;
}

inline MPoly mpoly_from_json_string(const std::string& s) {
  Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return mpoly_from_json(j);
}

}  // namespace eulab
