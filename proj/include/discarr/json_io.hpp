#pragma once

// JSON encoding. Rationals are strings "p" or "p/q" so nothing is lost;
// nlohmann::json keeps object keys sorted, which makes output byte-stable.

#include "discarr/nvg.hpp"

#include <nlohmann/json.hpp>

namespace discarr {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("expected a rational as string or integer, got " + std::string(j.type_name()));
}

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) hs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return {{"k", a.k()}, {"hyperplanes", hs}};
}

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline Arrangement arrangement_from_json(const Json& j) {
  const int k = detail::int_field(j, "k");
  if (k < 1) throw InputError("arrangement: k must be positive");
  const Json& hs = detail::field(j, "hyperplanes");
  if (!hs.is_array()) throw InputError("arrangement: 'hyperplanes' must be an array");
  std::vector<Hyperplane> planes;
  for (const auto& h : hs) {
    Hyperplane p;
    p.normal = vector_from_json(detail::field(h, "normal"));
    p.offset = h.contains("offset") ? rational_from_json(h.at("offset")) : Rational(0);
    planes.push_back(std::move(p));
  }
  return Arrangement(static_cast<std::size_t>(k), std::move(planes));
}

inline Json to_json(const RSet& t) { return {{"n", t.n}, {"k", t.k}, {"sets", t.sets}}; }

inline RSet rset_from_json(const Json& j) {
  const Json& sets = detail::field(j, "sets");
  if (!sets.is_array()) throw InputError("rset: 'sets' must be an array");
  std::vector<std::vector<int>> members;
  for (const auto& s : sets) {
    if (!s.is_array()) throw InputError("rset: each member must be an array of labels");
    std::vector<int> m;
    for (const auto& x : s) {
      if (!x.is_number_integer()) throw InputError("rset: labels must be integers");
      m.push_back(x.get<int>());
    }
    members.push_back(std::move(m));
  }
  return make_rset(detail::int_field(j, "n"), detail::int_field(j, "k"), std::move(members));
}

inline Json to_json(const Translation& tr) { return {{"t", to_json(tr.t)}}; }

inline Translation translation_from_json(const Json& j) {
  if (j.is_array()) return {vector_from_json(j)};
  return {vector_from_json(detail::field(j, "t"))};
}

inline Json to_json(const KTVectorFamily& f) {
  Json sets = Json::array();
  for (const auto& s : f.sets()) {
    Json one = Json::array();
    for (const auto& v : s) one.push_back(to_json(v));
    sets.push_back(one);
  }
  return {{"r", f.r()}, {"k", f.k()}, {"d", f.d()}, {"sets", sets}};
}

inline KTVectorFamily family_from_json(const Json& j) {
  const Json& sets = detail::field(j, "sets");
  if (!sets.is_array()) throw InputError("family: 'sets' must be an array");
  std::vector<std::vector<Vector>> out;
  for (const auto& s : sets) {
    if (!s.is_array()) throw InputError("family: each set must be an array of vectors");
    std::vector<Vector> one;
    for (const auto& v : s) one.push_back(vector_from_json(v));
    out.push_back(std::move(one));
  }
  KTVectorFamily f(detail::int_field(j, "r"), detail::int_field(j, "k"), std::move(out));
  if (j.contains("d") && j.at("d") != f.d()) throw InputError("family: 'd' disagrees with the number of sets");
  return f;
}

inline Json to_json(const Verdict& v) {
  return {{"stratum_rank", v.stratum_rank},
          {"multiplicity", v.multiplicity},
          {"r_simple", v.r_simple},
          {"non_very_generic", v.non_very_generic},
          {"transcript", v.transcript}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.stratum_rank = detail::field(j, "stratum_rank").get<std::size_t>();
  v.multiplicity = detail::field(j, "multiplicity").get<std::size_t>();
  v.r_simple = detail::field(j, "r_simple").get<bool>();
  v.non_very_generic = detail::field(j, "non_very_generic").get<bool>();
  if (j.contains("transcript")) v.transcript = j.at("transcript").get<std::vector<std::string>>();
  return v;
}

inline Json to_json(const SynthesisReport& rep) {
  return {{"mode", to_string(rep.mode)},
          {"seed", rep.seed},
          {"attempts", rep.attempts},
          {"arrangement", to_json(rep.arrangement)},
          {"rset", to_json(rep.rset)},
          {"family", to_json(rep.family)},
          {"verdict", to_json(rep.verdict)},
          {"bound",
           {{"union_size", rep.union_size},
            {"common_rank", rep.common_rank},
            {"required_sets", rep.required_sets},
            {"independent_sets", rep.independent_sets},
            {"rank_gap", static_cast<long>(rep.verdict.multiplicity) - static_cast<long>(rep.verdict.stratum_rank)}}}};
}

inline SynthesisReport report_from_json(const Json& j) {
  SynthesisReport rep;
  rep.arrangement = arrangement_from_json(detail::field(j, "arrangement"));
  rep.family = family_from_json(detail::field(j, "family"));
  rep.rset = rset_from_json(detail::field(j, "rset"));
  rep.verdict = verdict_from_json(detail::field(j, "verdict"));
  const std::string mode = detail::field(j, "mode").get<std::string>();
  if (mode != "nonint" && mode != "goodrs") throw InputError("report: unknown mode '" + mode + "'");
  rep.mode = mode == "nonint" ? FamilyMode::nonint : FamilyMode::goodrs;
  rep.seed = detail::field(j, "seed").get<std::uint64_t>();
  rep.attempts = detail::field(j, "attempts").get<std::size_t>();
  const Json& b = detail::field(j, "bound");
  rep.union_size = detail::int_field(b, "union_size");
  rep.common_rank = detail::int_field(b, "common_rank");
  rep.required_sets = detail::int_field(b, "required_sets");
  rep.independent_sets = detail::int_field(b, "independent_sets");
  return rep;
}

/// Parses text, turning syntax errors into InputError.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace discarr
