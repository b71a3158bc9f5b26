// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON (de)serialization.  All numeric payloads cross this boundary as
// exact decimal/fraction strings, never as floats.

#ifndef TRACTS_JSON_IO_HPP
#define TRACTS_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tracts/errors.hpp"
#include "tracts/flats.hpp"
#include "tracts/gp.hpp"
#include "tracts/hyperarr.hpp"
#include "tracts/matroid.hpp"
#include "tracts/pointline.hpp"
#include "tracts/rep.hpp"
#include "tracts/tract.hpp"

namespace tracts::io {

using nlohmann::json;

inline json tract_to_json(const Tract& t) {
  json j = {{"kind", kind_name(t.kind())}};
  if (t.kind() == TractKind::gf) j["p"] = t.p();
  return j;
}

inline Tract tract_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw invalid_input("tract: expected {\"kind\": ...}");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "krasner") return Tract::krasner();
  if (kind == "tropical") return Tract::tropical();
  if (kind == "rationals") return Tract::rationals();
  if (kind == "gf") {
    if (!j.contains("p")) throw invalid_input("tract: gf needs \"p\"");
    return Tract::gf(j.at("p").get<long>());
  }
  throw invalid_input("tract: unknown kind '" + kind + "'");
}

inline json tvec_to_json(const Tract& t, const TVec& x) {
  json j = json::array();
  for (const TractElement& v : x) j.push_back(Tract::to_string(v));
  return j;
}

inline TVec tvec_from_json(const Tract& t, const json& j, int n = -1) {
  if (!j.is_array()) throw invalid_input("vector: expected an array");
  TVec out;
  for (const json& v : j) out.push_back(t.parse(v.get<std::string>()));
  if (n >= 0 && static_cast<int>(out.size()) != n)
    throw invalid_input("vector: wrong length");
  return out;
}

inline json subset_to_json(Subset s) { return json(set_elements(s)); }

inline Subset subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw invalid_input("subset: expected an array");
  Subset s = 0;
  for (const json& v : j) {
    int e = v.get<int>();
    if (e < 0 || e >= n) throw invalid_input("subset: element out of range");
    s |= (1u << e);
  }
  return s;
}

inline Subset subset_from_key(const std::string& key, int n) {
  Subset s = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int e = std::stoi(cur);
    if (e < 0 || e >= n) throw invalid_input("subset key out of range");
    s |= (1u << e);
    cur.clear();
  };
  for (char c : key) {
    if (c == ',')
      flush();
    else if (c >= '0' && c <= '9')
      cur += c;
    else
      throw invalid_input("bad subset key '" + key + "'");
  }
  flush();
  return s;
}

inline json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_to_json(b));
  return {{"n", m.n()}, {"r", m.rank()}, {"bases", bases}};
}

inline Matroid matroid_from_json(const json& j) {
  int n = j.at("n").get<int>();
  int r = j.at("r").get<int>();
  std::vector<Subset> bases;
  for (const json& b : j.at("bases")) bases.push_back(subset_from_json(b, n));
  return Matroid::from_bases(n, r, bases);
}

inline json gp_to_json(const GPFunction& phi) {
  json values = json::object();
  for (const auto& [key, val] : phi.values())
    values[subset_to_string(key)] = Tract::to_string(val);
  return {{"tract", tract_to_json(phi.tract())},
          {"n", phi.n()},
          {"r", phi.rank()},
          {"values", values}};
}

/// Parses and validates (GP1-GP3) a GP function.
inline GPFunction gp_from_json(const json& j,
                               int guard_n = GPFunction::kDefaultGp3Guard) {
  Tract t = tract_from_json(j.at("tract"));
  int n = j.at("n").get<int>();
  int r = j.at("r").get<int>();
  std::map<Subset, TractElement> values;
  for (const auto& [key, val] : j.at("values").items()) {
    Subset s = subset_from_key(key, n);
    if (values.count(s)) throw invalid_input("gp: duplicate key " + key);
    values[s] = t.parse(val.get<std::string>());
  }
  return GPFunction::new_checked(t, n, r, std::move(values), guard_n);
}

inline json rep_to_json(const Representation& rep) {
  json eta = json::object();
  for (const auto& [h, row] : rep.eta)
    eta[subset_to_string(h)] = tvec_to_json(rep.t, row);
  return {{"tract", tract_to_json(rep.t)},
          {"matroid", matroid_to_json(rep.m)},
          {"eta", eta}};
}

inline Representation rep_from_json(const json& j) {
  Tract t = tract_from_json(j.at("tract"));
  Matroid m = matroid_from_json(j.at("matroid"));
  std::map<Subset, TVec> eta;
  for (const auto& [key, val] : j.at("eta").items())
    eta[subset_from_key(key, m.n())] = tvec_from_json(t, val, m.n());
  return Representation{t, m, std::move(eta)};
}

/// Lattices of T-flats: explicit member lists over finite tracts,
/// generators only otherwise.
inline json tflat_lattice_to_json(const TFlatLattice& lat,
                                  long guard = kEnumerationGuard) {
  json flats = json::array();
  for (const TFlat& tf : lat.tflats()) {
    json entry = {{"F", subset_to_json(tf.flat)}};
    if (lat.tract().finite()) {
      json members = json::array();
      for (const TVec& x : tf.predicate.members(guard))
        members.push_back(tvec_to_json(lat.tract(), x));
      entry["members"] = members;
    } else {
      json gens = json::array();
      for (const TVec& g : tf.predicate.generators())
        gens.push_back(tvec_to_json(lat.tract(), g));
      entry["generators"] = gens;
    }
    flats.push_back(entry);
  }
  return {{"tract", tract_to_json(lat.tract())},
          {"n", lat.n()},
          {"flats", flats}};
}

struct ExplicitCollection {
  Tract t;
  int n;
  std::vector<std::vector<TVec>> members;
};

inline ExplicitCollection collection_from_json(const json& j) {
  Tract t = tract_from_json(j.at("tract"));
  int n = j.at("n").get<int>();
  std::vector<std::vector<TVec>> members;
  for (const json& entry : j.at("flats")) {
    if (!entry.contains("members"))
      throw invalid_input("lattice checker needs explicit \"members\"");
    std::vector<TVec> mem;
    for (const json& x : entry.at("members"))
      mem.push_back(tvec_from_json(t, x, n));
    members.push_back(std::move(mem));
  }
  return ExplicitCollection{t, n, std::move(members)};
}

inline json arrangement_to_json(const PointLineArrangement& a) {
  json points = json::array();
  for (const ProjectivePoint& p : a.points)
    points.push_back(tvec_to_json(a.t, p.rep));
  json lines = json::array();
  for (const Line& l : a.lines) lines.push_back(gp_to_json(l.psi));
  return {{"tract", tract_to_json(a.t)},
          {"n", a.n},
          {"points", points},
          {"lines", lines}};
}

inline PointLineArrangement arrangement_from_json(
    const json& j, int guard_n = GPFunction::kDefaultGp3Guard) {
  Tract t = tract_from_json(j.at("tract"));
  int n = j.at("n").get<int>();
  PointLineArrangement a{t, n, {}, {}};
  for (const json& p : j.at("points"))
    a.points.push_back(projectivize(t, tvec_from_json(t, p, n)));
  for (const json& l : j.at("lines"))
    a.lines.push_back(Line{gp_from_json(l, guard_n)});
  return a;
}

inline json matrix_to_json(const Tract& field, const FieldMatrix& m) {
  json rows = json::array();
  for (const TVec& row : m) rows.push_back(tvec_to_json(field, row));
  return {{"field", tract_to_json(field)}, {"rows", rows}};
}

inline std::pair<Tract, FieldMatrix> matrix_from_json(const json& j) {
  Tract t = tract_from_json(j.at("field"));
  FieldMatrix m;
  for (const json& row : j.at("rows"))
    m.push_back(tvec_from_json(t, row));
  for (const TVec& row : m)
    if (row.size() != m[0].size())
      throw invalid_input("matrix: ragged rows");
  return {t, std::move(m)};
}

inline json report_to_json(const CheckReport& r) {
  json j = {{"ok", r.ok}};
  if (!r.ok) {
    j["axiom"] = r.axiom;
    j["message"] = r.message;
    j["detail"] = r.detail;
  }
  return j;
}

}  // namespace tracts::io

#endif  // TRACTS_JSON_IO_HPP
