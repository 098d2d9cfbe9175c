/**
 * @file ramlab/json_io.hpp
 * @brief JSON encodings of the library's values.
 *
 * Rationals are always strings ("3", "-1/2"), never JSON numbers, so that
 * values survive a round trip exactly. Input accepts JSON integers as well.
 */
#pragma once

#include "ramlab/breakdec.hpp"
#include "ramlab/conductor.hpp"
#include "ramlab/laurent.hpp"
#include "ramlab/ramify.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>

namespace ramlab::io {

using Json = nlohmann::ordered_json;

/// Input that does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

// --- Rat / GammaVal -------------------------------------------------------

inline Json to_json(const Rat& q) { return to_string(q); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) throw SchemaError("rational must be a \"num/den\" string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

inline Json to_json(const GammaVal& g) { return Json{{"flat", to_json(g.flat)}, {"eps", to_json(g.eps)}}; }

inline GammaVal gamma_from_json(const Json& j) {
  return {rat_from_json(field(j, "flat")), rat_from_json(field(j, "eps"))};
}

inline Json to_json(const GammaOrInf& g) { return g.is_infinite() ? Json("inf") : to_json(g.value()); }
inline Json to_json(const RatOrInf& q) { return q.is_infinite() ? Json("inf") : to_json(q.value()); }

// --- Laurent --------------------------------------------------------------

inline Json to_json(const LaurentVal& f) {
  Json terms = Json::object();
  for (const auto& [deg, v] : f.terms()) terms[std::to_string(deg)] = to_json(v);
  return Json{{"terms", terms}};
}

inline LaurentVal laurent_from_json(const Json& j) {
  const auto& terms = field(j, "terms");
  if (!terms.is_object()) throw SchemaError("'terms' must be an object");
  LaurentVal f;
  for (const auto& [key, val] : terms.items()) {
    std::int64_t deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError("bad degree key '" + key + "'");
    }
    f.set(deg, rat_from_json(val));
  }
  return f;
}

inline Json to_json(const RadiusInterval& i) { return Json{{"lo", to_json(i.lo)}, {"hi", to_json(i.hi)}}; }

inline RadiusInterval interval_from_json(const Json& j) {
  return RadiusInterval(rat_from_json(field(j, "lo")), rat_from_json(field(j, "hi")));
}

inline Side side_from_json(const Json& j) {
  if (j == "Inner" || j == "inner") return Side::Inner;
  if (j == "Outer" || j == "outer") return Side::Outer;
  throw SchemaError("side must be \"Inner\" or \"Outer\"");
}

// --- PLFun ----------------------------------------------------------------

inline Json to_json(const PLFun& f) {
  Json pieces = Json::array();
  for (const auto& pc : f.pieces()) pieces.push_back(Json{{"until", to_json(pc.until)}, {"slope", to_json(pc.slope)}});
  return Json{{"at0", to_json(f.value_at_0())}, {"pieces", pieces}, {"final_slope", to_json(f.final_slope())}};
}

inline PLFun plfun_from_json(const Json& j) {
  std::vector<PLFun::Piece> pieces;
  if (j.contains("pieces")) {
    const auto& arr = j.at("pieces");
    if (!arr.is_array()) throw SchemaError("'pieces' must be an array");
    for (const auto& pc : arr) pieces.push_back({rat_from_json(field(pc, "until")), rat_from_json(field(pc, "slope"))});
  }
  return PLFun(rat_from_json(field(j, "at0")), std::move(pieces), rat_from_json(field(j, "final_slope")));
}

// --- groups and class functions --------------------------------------------

inline Json to_json(const FiniteGroup& g) {
  Json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline FiniteGroup group_from_json(const Json& j) {
  const auto order = int_field(j, "order");
  const auto& t = field(j, "table");
  if (!t.is_array()) throw SchemaError("'table' must be an array of rows");
  FiniteGroup::Table table;
  try {
    table = t.get<FiniteGroup::Table>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("'table' must be an array of integer rows");
  }
  if (static_cast<std::int64_t>(table.size()) != order) throw SchemaError("table size does not match 'order'");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup(std::move(table), std::move(labels));
}

/// Class functions are emitted per conjugacy class, classes ordered by minimal element.
inline Json to_json(const ClassFun& cf) {
  Json classes = Json::array(), values = Json::array();
  const auto vals = cf.class_values();
  for (std::size_t k = 0; k < vals.size(); ++k) {
    classes.push_back(cf.group().classes()[k]);
    values.push_back(to_json(vals[k]));
  }
  return Json{{"classes", classes}, {"values", values}};
}

// --- RamPoint ---------------------------------------------------------------

inline Json to_json(const RamPoint& rp) {
  Json imap = Json::object();
  for (int s = 1; s < rp.order(); ++s) imap[std::to_string(s)] = to_json(rp.i(s));
  return Json{{"order", rp.order()}, {"table", rp.group->table()}, {"i_map", imap},
              {"gamma0", to_json(rp.gamma0)}, {"p", rp.p}, {"rho", to_json(rp.rho)}};
}

inline RamPoint rampoint_from_json(const Json& j) {
  auto g = std::make_shared<const FiniteGroup>(group_from_json(j));
  const auto& imap = field(j, "i_map");
  if (!imap.is_object()) throw SchemaError("'i_map' must be an object");
  std::vector<GammaVal> i(g->order());
  std::vector<char> seen(g->order(), 0);
  for (const auto& [key, val] : imap.items()) {
    int s = -1;
    try {
      s = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError("bad element key '" + key + "'");
    }
    if (s < 1 || s >= g->order()) throw SchemaError("i_map key out of range: " + key);
    i[s] = gamma_from_json(val);
    seen[s] = 1;
  }
  for (int s = 1; s < g->order(); ++s)
    if (!seen[s]) throw SchemaError("i_map misses element " + std::to_string(s));
  const Rat rho = j.contains("rho") ? rat_from_json(j.at("rho")) : Rat(0);
  return RamPoint(std::move(g), std::move(i), gamma_from_json(field(j, "gamma0")), int_field(j, "p"), rho);
}

// --- FilteredRep / BreakDecomp ---------------------------------------------

inline Json to_json(const ModMatrix& m) { return Json(m.rows()); }

inline Json to_json(const FilteredRep& rep) {
  Json action = Json::object();
  for (int g = 0; g < rep.group().order(); ++g) action[std::to_string(g)] = to_json(rep.action(g));
  return Json{{"ell", rep.ring().ell}, {"n", rep.ring().n}, {"p", rep.p()}, {"group", to_json(rep.group())},
              {"chain", rep.chain()}, {"action", action}};
}

inline FilteredRep filtered_rep_from_json(const Json& j) {
  const FinRing ring(int_field(j, "ell"), static_cast<int>(int_field(j, "n")));
  auto g = std::make_shared<const FiniteGroup>(group_from_json(field(j, "group")));
  std::vector<std::vector<int>> chain;
  try {
    chain = field(j, "chain").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("'chain' must be a list of element lists");
  }
  const auto& act = field(j, "action");
  if (!act.is_object()) throw SchemaError("'action' must be an object");
  std::vector<ModMatrix> mats(g->order());
  std::vector<char> seen(g->order(), 0);
  for (const auto& [key, val] : act.items()) {
    int s = -1;
    try {
      s = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError("bad element key '" + key + "'");
    }
    if (s < 0 || s >= g->order()) throw SchemaError("action key out of range: " + key);
    std::vector<std::vector<std::int64_t>> rows;
    try {
      rows = val.get<std::vector<std::vector<std::int64_t>>>();
    } catch (const nlohmann::json::exception&) {
      throw SchemaError("action matrices must be arrays of integer rows");
    }
    if (rows.empty()) throw SchemaError("empty action matrix");
    mats[s] = ModMatrix(ring.modulus(), rows);
    seen[s] = 1;
  }
  for (int s = 0; s < g->order(); ++s)
    if (!seen[s]) throw SchemaError("action misses element " + std::to_string(s));
  std::optional<std::int64_t> p;
  if (j.contains("p")) p = int_field(j, "p");
  return FilteredRep(std::move(g), std::move(chain), ring, std::move(mats), p);
}

inline Json to_json(const BreakDecomp& dec) {
  Json comps = Json::array();
  for (const auto& c : dec.components)
    comps.push_back(Json{{"index", c.index}, {"rank", c.rank}, {"length", dec.ring_exponent * c.rank},
                         {"projector", to_json(c.projector)}});
  return comps;
}

inline Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json e{{"name", it.name}, {"pass", it.passed}};
    if (!it.detail.empty()) e["detail"] = it.detail;
    items.push_back(std::move(e));
  }
  return Json{{"pass", r.ok()}, {"checks", items}};
}

// --- profiles -----------------------------------------------------------------

inline Json to_json(const BreakProfile& pr) {
  Json curves = Json::array();
  for (const auto& c : pr.curves) {
    Json e{{"f", to_json(c.f)}, {"m", c.m}};
    if (c.upper_bound) e["upper_bound"] = true;
    curves.push_back(std::move(e));
  }
  return Json{{"l", pr.l}, {"curves", curves}};
}

inline BreakProfile profile_from_json(const Json& j) {
  const auto& arr = field(j, "curves");
  if (!arr.is_array()) throw SchemaError("'curves' must be an array");
  std::vector<BreakCurve> curves;
  for (const auto& c : arr) {
    BreakCurve bc{plfun_from_json(field(c, "f")), int_field(c, "m"), false};
    if (c.contains("upper_bound")) bc.upper_bound = c.at("upper_bound").get<bool>();
    curves.push_back(std::move(bc));
  }
  const std::int64_t l = j.contains("l") ? int_field(j, "l") : 1;
  return BreakProfile(std::move(curves), l);
}

inline Json to_json(const NewtonBreak& b) { return Json{{"q", to_json(b.q)}, {"c", to_json(b.c)}, {"mu", b.mu}}; }

inline NewtonBreak newton_break_from_json(const Json& j) {
  return {rat_from_json(field(j, "q")), rat_from_json(field(j, "c")), int_field(j, "mu")};
}

}  // namespace ramlab::io
