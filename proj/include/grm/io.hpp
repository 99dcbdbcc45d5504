#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "grm/blocking.hpp"
#include "grm/classify.hpp"
#include "grm/code.hpp"
#include "grm/error.hpp"
#include "grm/geometry.hpp"
#include "grm/poly.hpp"
#include "grm/search.hpp"

// JSON documents for codewords, flats and the various reports. Objects keep
// insertion order so identical inputs serialize byte-identically.
namespace grm::io {

using Json = nlohmann::ordered_json;

enum class Repr { Table, Poly };

inline Json point_json(std::span<const Elem> x) {
  Json a = Json::array();
  for (auto v : x) a.push_back(static_cast<int>(v));
  return a;
}

inline Json flat_json(const AffineFlat& flat) {
  Json dirs = Json::array();
  for (const auto& d : flat.directions()) dirs.push_back(point_json(d));
  return Json{{"base", point_json(flat.base())}, {"directions", std::move(dirs)}, {"dim", flat.dim()}};
}

/// {"p", "n", "irreducible", "m", "repr", "values" | "terms"}.
inline Json codeword_json(const FuncTable& t, Repr repr = Repr::Table) {
  const Field& f = t.field();
  Json j;
  j["p"] = f.characteristic();
  j["n"] = f.extension_degree();
  j["irreducible"] = f.irreducible();
  j["m"] = t.vars();
  if (repr == Repr::Table) {
    j["repr"] = "table";
    j["values"] = point_json(t.values());
  } else {
    j["repr"] = "poly";
    Json terms = Json::array();
    const auto poly = interpolate(t);
    for (const auto& [mono, c] : poly.terms()) {
      Json exps = Json::array();
      for (auto e : mono) exps.push_back(static_cast<int>(e));
      terms.push_back(Json{{"exps", std::move(exps)}, {"coeff", static_cast<int>(c)}});
    }
    j["terms"] = std::move(terms);
  }
  return j;
}

namespace detail {

inline const Json& field_of(const Json& j, const char* name) {
  if (!j.is_object()) throw SchemaError("codeword document must be a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline int int_of(const Json& v, const std::string& name, int lo, int hi) {
  if (!v.is_number_integer()) throw SchemaError("field \"" + name + "\" must be an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi)
    throw SchemaError("field \"" + name + "\" = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

}  // namespace detail

/// Parses a codeword document. Throws SchemaError naming the offending field.
inline FuncTable codeword_from_json(const Json& j) {
  using detail::field_of;
  using detail::int_of;
  const int p = int_of(field_of(j, "p"), "p", 2, 9);
  const int n = int_of(field_of(j, "n"), "n", 1, 6);
  int q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (!Field::supported(q))
    throw SchemaError("fields \"p\" and \"n\" give q = " + std::to_string(q) + "; supported orders are " + Field::supported_orders());
  const Field& f = Field::get(q);
  const Json& irr = field_of(j, "irreducible");
  if (!irr.is_array()) throw SchemaError("field \"irreducible\" must be an array");
  std::vector<int> coeffs;
  for (const auto& c : irr) {
    if (!c.is_number_integer()) throw SchemaError("field \"irreducible\" must contain integers");
    coeffs.push_back(c.get<int>());
  }
  if (coeffs != f.irreducible()) throw SchemaError("field \"irreducible\" does not match the fixed polynomial for GF(" + std::to_string(q) + ")");
  const int m = int_of(field_of(j, "m"), "m", 0, 16);
  const Json& repr = field_of(j, "repr");
  if (!repr.is_string()) throw SchemaError("field \"repr\" must be a string");
  const auto r = repr.get<std::string>();
  if (r == "table") {
    const Json& vals = field_of(j, "values");
    if (!vals.is_array()) throw SchemaError("field \"values\" must be an array");
    const auto expect = point_count(q, m);
    if (vals.size() != expect)
      throw SchemaError("field \"values\" has " + std::to_string(vals.size()) + " entries, expected q^m = " + std::to_string(expect));
    std::vector<Elem> v;
    v.reserve(expect);
    for (const auto& x : vals) v.push_back(static_cast<Elem>(int_of(x, "values", 0, q - 1)));
    return FuncTable(f, m, std::move(v));
  }
  if (r == "poly") {
    const Json& terms = field_of(j, "terms");
    if (!terms.is_array()) throw SchemaError("field \"terms\" must be an array");
    ReducedPoly poly(f, m);
    for (const auto& term : terms) {
      const Json& exps = field_of(term, "exps");
      if (!exps.is_array() || exps.size() != static_cast<std::size_t>(m))
        throw SchemaError("field \"exps\" must be an array of " + std::to_string(m) + " exponents");
      Monomial mono;
      for (const auto& e : exps) mono.push_back(static_cast<std::uint8_t>(int_of(e, "exps", 0, q - 1)));
      poly.add_term(mono, static_cast<Elem>(int_of(field_of(term, "coeff"), "coeff", 0, q - 1)));
    }
    return to_table(poly);
  }
  throw SchemaError("field \"repr\" must be \"table\" or \"poly\", got \"" + r + "\"");
}

inline FuncTable codeword_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return codeword_from_json(j);
}

inline Json params_json(const CodeParams& p) {
  return Json{{"q", p.q}, {"m", p.m}, {"r", p.r}, {"t", p.t}, {"s", p.s}};
}

inline Json weights_json(const CodeParams& p) {
  Json j = params_json(p);
  j["w1"] = min_weight(p);
  const auto rep = second_weight(p);
  j["w2"] = rep.w2 ? Json(*rep.w2) : Json(nullptr);
  j["regime"] = regime_name(rep.regime);
  return j;
}

inline Json classification_json(const Classification& c) {
  Json j;
  j["tag"] = tag_name(c.tag);
  Json matched = Json::array();
  for (auto t : c.matched) matched.push_back(tag_name(t));
  j["matched"] = std::move(matched);
  j["regime_covered"] = c.regime_covered;
  if (!c.note.empty()) j["note"] = c.note;
  j["hull"] = c.hull ? flat_json(*c.hull) : Json(nullptr);
  Json members = Json::array(), removed = Json::array(), points = Json::array();
  for (const auto& f : c.members) members.push_back(flat_json(f));
  for (const auto& f : c.removed) removed.push_back(flat_json(f));
  for (const auto& x : c.points) points.push_back(point_json(x));
  j["members"] = std::move(members);
  j["removed"] = std::move(removed);
  if (!c.points.empty()) j["points"] = std::move(points);
  return j;
}

inline Json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
  Json j = Json::object();
  for (auto [w, c] : h) j[std::to_string(w)] = c;
  return j;
}

/// The report without wall time, so that reruns are byte-identical.
inline Json enum_report_json(const EnumReport& rep) {
  Json j;
  j["params"] = params_json(rep.params);
  j["dimension"] = rep.dimension;
  j["codewords"] = rep.total;
  j["cutoff"] = rep.cutoff;
  j["histogram"] = histogram_json(rep.histogram_to_cutoff());
  j["observed_w1"] = rep.observed_w1 ? Json(*rep.observed_w1) : Json(nullptr);
  j["observed_w2"] = rep.observed_w2 ? Json(*rep.observed_w2) : Json(nullptr);
  j["w1"] = min_weight(rep.params);
  const auto w2 = rep.params.q >= 3 ? second_weight(rep.params).w2 : std::nullopt;
  j["w2"] = w2 ? Json(*w2) : Json(nullptr);
  Json words = Json::array();
  for (const auto& w : rep.words)
    words.push_back(Json{{"index", w.index}, {"weight", w.weight}, {"values", point_json(w.values)}});
  j["words"] = std::move(words);
  return j;
}

/// "weight,count" lines over the whole histogram.
inline std::string histogram_csv(const EnumReport& rep) {
  std::ostringstream os;
  os << "weight,count\n";
  for (auto [w, c] : rep.histogram) os << w << ',' << c << '\n';
  return os.str();
}

inline Json blocking_search_json(const BlockingSearchReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["bound"] = r.bound;
  j["subsets_below_bound"] = r.subsets_below_bound;
  j["blocking_below_bound"] = r.blocking_below_bound;
  j["subsets_at_or_above_bound"] = r.subsets_at_or_above;
  j["blocking_total"] = r.blocking_total;
  j["minimum"] = r.minimum ? Json(*r.minimum) : Json(nullptr);
  j["count_at_minimum"] = r.count_at_minimum;
  Json w = Json::array();
  for (const auto& x : r.witness) w.push_back(point_json(x));
  j["witness"] = std::move(w);
  j["bound_holds"] = r.bound_holds();
  return j;
}

inline Json factor_free_json(const FactorFreeReport& r) {
  Json j;
  j["q"] = r.q;
  j["b"] = r.b;
  j["order"] = r.order;
  j["weight_limit"] = r.weight_limit;
  j["codewords"] = r.codewords;
  j["in_range"] = r.in_range;
  j["with_linear_factor"] = r.with_factor;
  j["factor_free"] = r.factor_free;
  j["blocking_ok"] = r.blocking_ok;
  j["violations"] = r.violations;
  j["violation_indices"] = r.violation_indices;
  j["vacuous"] = r.vacuous();
  j["every_in_range_word_has_linear_factor"] = r.bridge_holds();
  return j;
}

}  // namespace grm::io
