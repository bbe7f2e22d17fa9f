// Copyright 2026 The hellycert Authors
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

#ifndef HELLYCERT_SERIALIZE_HPP
#define HELLYCERT_SERIALIZE_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hellycert/bctree.hpp"
#include "hellycert/instances.hpp"
#include "hellycert/search.hpp"
#include "hellycert/splitcover.hpp"

namespace hellycert {

using json = nlohmann::json;

/// Malformed document: bad JSON, missing fields, wrong types or inconsistent dimensions.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

// Rationals and vectors.

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) {
  if (!j.is_string()) throw ParseError("rational must be a string \"p\" or \"p/q\"");
  try {
    r = Rational::parse(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline RVec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  RVec v;
  for (const auto& x : j) v.push_back(x.get<Rational>());
  return v;
}

// Geometry.

inline void to_json(json& j, const Halfspace& h) { j = json{{"a", h.normal}, {"b", h.rhs}}; }
inline void from_json(const json& j, Halfspace& h) {
  h.normal = vec_from_json(detail::field(j, "a"));
  h.rhs = detail::field(j, "b").get<Rational>();
}

inline std::vector<Halfspace> rows_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("rows must be an array");
  std::vector<Halfspace> rows;
  for (const auto& r : j) rows.push_back(r.get<Halfspace>());
  return rows;
}

inline void to_json(json& j, const Polyhedron& p) { j = json{{"dim", p.dim}, {"rows", p.rows}}; }
inline void from_json(const json& j, Polyhedron& p) {
  std::size_t dim = detail::natural(detail::field(j, "dim"), "dim");
  if (dim < 1) throw ParseError("dim must be at least 1");
  try {
    p = Polyhedron(dim, rows_from_json(detail::field(j, "rows")));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// Certificates.

inline void to_json(json& j, const Multiplier& m) { j = json::array({m.row, m.value}); }
inline void from_json(const json& j, Multiplier& m) {
  if (!j.is_array() || j.size() != 2) throw ParseError("multiplier must be [index, \"p/q\"]");
  m.row = detail::natural(j[0], "multiplier index");
  m.value = j[1].get<Rational>();
}

inline Multipliers multipliers_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("multipliers must be an array");
  Multipliers out;
  for (const auto& m : j) out.push_back(m.get<Multiplier>());
  return out;
}

inline void expect_kind(const json& j, const char* kind) {
  if (detail::text(detail::field(j, "kind"), "kind") != kind)
    throw ParseError(std::string("expected certificate kind '") + kind + "'");
}

inline void to_json(json& j, const FarkasCert& c) { j = json{{"kind", "farkas"}, {"multipliers", c.multipliers}}; }
inline void from_json(const json& j, FarkasCert& c) {
  expect_kind(j, "farkas");
  c.multipliers = multipliers_from_json(detail::field(j, "multipliers"));
}

inline void to_json(json& j, const BoundCert& c) {
  j = json{{"kind", "bound"}, {"objective", c.objective}, {"bound", c.bound}, {"multipliers", c.multipliers}};
}
inline void from_json(const json& j, BoundCert& c) {
  expect_kind(j, "bound");
  c.objective = vec_from_json(detail::field(j, "objective"));
  c.bound = detail::field(j, "bound").get<Rational>();
  c.multipliers = multipliers_from_json(detail::field(j, "multipliers"));
}

inline void to_json(json& j, const DominanceCert& c) {
  j = json{{"kind", "dominance"}, {"target", c.target}, {"multipliers", c.multipliers}};
}
inline void from_json(const json& j, DominanceCert& c) {
  expect_kind(j, "dominance");
  c.target = detail::field(j, "target").get<Halfspace>();
  c.multipliers = multipliers_from_json(detail::field(j, "multipliers"));
}

// Tree labels.

inline void to_json(json& j, const Disjunction& d) {
  switch (d.kind) {
    case DisjunctionKind::split: j = json{{"kind", "split"}, {"alpha", d.alpha}, {"beta", d.beta}}; break;
    case DisjunctionKind::variable:
      j = json{{"kind", "variable"}, {"index", d.index}, {"alpha", d.alpha}, {"beta", d.beta}};
      break;
    case DisjunctionKind::general: j = json{{"kind", "general"}, {"terms", d.general_terms}}; break;
  }
}
inline void from_json(const json& j, Disjunction& d) {
  std::string kind = detail::text(detail::field(j, "kind"), "disjunction kind");
  d = Disjunction{};
  if (kind == "general") {
    d.kind = DisjunctionKind::general;
    const json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) d.general_terms.push_back(rows_from_json(t));
    return;
  }
  if (kind == "split") d.kind = DisjunctionKind::split;
  else if (kind == "variable") d.kind = DisjunctionKind::variable;
  else throw ParseError("unknown disjunction kind '" + kind + "'");
  if (d.kind == DisjunctionKind::variable) d.index = detail::natural(detail::field(j, "index"), "index");
  d.alpha = vec_from_json(detail::field(j, "alpha"));
  d.beta = detail::field(j, "beta").get<Rational>();
}

inline void to_json(json& j, const CutStep& s) {
  j = json{{"source", s.source}, {"cut", s.cut}, {"certifier", s.certifier}, {"source_evidence", s.source_evidence}};
}
inline void from_json(const json& j, CutStep& s) {
  s.source = detail::field(j, "source").get<Halfspace>();
  s.cut = detail::field(j, "cut").get<Halfspace>();
  s.certifier = detail::field(j, "certifier").get<FarkasCert>();
  s.source_evidence = detail::field(j, "source_evidence").get<DominanceCert>();
}

inline void to_json(json& j, const SecondLabel& l) {
  if (auto* b = std::get_if<Branch>(&l)) j = json{{"type", "branch"}, {"disjunction", b->disjunction}};
  else if (auto* c = std::get_if<Cut>(&l)) j = json{{"type", "cut"}, {"step", c->step}};
  else if (std::holds_alternative<LeafEmpty>(l)) j = json{{"type", "leaf-empty"}};
  else if (auto* f = std::get_if<LeafFarkas>(&l)) j = json{{"type", "leaf-farkas"}, {"cert", f->cert}};
  else j = json{{"type", "leaf-dominance"}, {"certs", std::get<LeafDominance>(l).certs}};
}
inline void from_json(const json& j, SecondLabel& l) {
  std::string type = detail::text(detail::field(j, "type"), "label type");
  if (type == "branch") l = Branch{detail::field(j, "disjunction").get<Disjunction>()};
  else if (type == "cut") l = Cut{detail::field(j, "step").get<CutStep>()};
  else if (type == "leaf-empty") l = LeafEmpty{};
  else if (type == "leaf-farkas") l = LeafFarkas{detail::field(j, "cert").get<FarkasCert>()};
  else if (type == "leaf-dominance") {
    const json& certs = detail::field(j, "certs");
    if (!certs.is_array()) throw ParseError("certs must be an array");
    LeafDominance d;
    for (const auto& c : certs) d.certs.push_back(c.get<DominanceCert>());
    l = std::move(d);
  } else {
    throw ParseError("unknown label type '" + type + "'");
  }
}

inline void to_json(json& j, const BCNode& n) {
  j = json{{"first_label", n.first_label}, {"label", n.label}, {"children", n.children}};
}
inline void from_json(const json& j, BCNode& n) {
  n.first_label = rows_from_json(detail::field(j, "first_label"));
  n.label = detail::field(j, "label").get<SecondLabel>();
  const json& kids = detail::field(j, "children");
  if (!kids.is_array()) throw ParseError("children must be an array");
  n.children.clear();
  for (const auto& k : kids) n.children.push_back(k.get<BCNode>());
}

inline void to_json(json& j, const Goal& g) {
  if (std::holds_alternative<InfeasibilityGoal>(g)) j = json{{"kind", "infeasibility"}};
  else if (auto* h = std::get_if<HullGoal>(&g)) j = json{{"kind", "hull"}, {"target", h->target}};
  else if (auto* m = std::get_if<MembershipGoal>(&g))
    j = json{{"kind", "membership"}, {"point", m->point}, {"separator", m->separator}};
  else j = json{{"kind", "validity"}, {"target", std::get<ValidityGoal>(g).target}};
}
inline void from_json(const json& j, Goal& g) {
  std::string kind = detail::text(detail::field(j, "kind"), "goal kind");
  if (kind == "infeasibility") g = InfeasibilityGoal{};
  else if (kind == "hull") g = HullGoal{detail::field(j, "target").get<Polyhedron>()};
  else if (kind == "membership")
    g = MembershipGoal{vec_from_json(detail::field(j, "point")), detail::field(j, "separator").get<Halfspace>()};
  else if (kind == "validity") g = ValidityGoal{detail::field(j, "target").get<Halfspace>()};
  else throw ParseError("unknown goal kind '" + kind + "'");
}

/// Certificate document: {"context": {"dim": n}, "system": ..., "goal": ..., "root": ...}.
inline void to_json(json& j, const BCTree& t) {
  j = json{{"context", json{{"dim", t.ctx.dim}}}, {"system", t.root_system}, {"goal", t.goal}, {"root", t.root}};
}
inline void from_json(const json& j, BCTree& t) {
  std::size_t dim = detail::natural(detail::field(detail::field(j, "context"), "dim"), "context dim");
  if (dim < 1) throw ParseError("context dim must be at least 1");
  t.ctx = EmbeddingContext(dim);
  t.root_system = detail::field(j, "system").get<Polyhedron>();
  if (t.root_system.dim != dim) throw ParseError("system dimension does not match context");
  t.goal = detail::field(j, "goal").get<Goal>();
  t.root = detail::field(j, "root").get<BCNode>();
}

// Split covers.

inline void to_json(json& j, const GSplit& g) { j = json{{"alpha", g.alpha}, {"beta", g.beta}}; }
inline void from_json(const json& j, GSplit& g) {
  try {
    g = GSplit::make(vec_from_json(detail::field(j, "alpha")), detail::field(j, "beta").get<Rational>());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline void to_json(json& j, const Region& r) {
  j = json{{"outer", r.outer}, {"inner", r.inner}, {"open_rows", r.open_rows}};
}
inline void from_json(const json& j, Region& r) {
  r.outer = detail::field(j, "outer").get<Polyhedron>();
  r.inner = detail::field(j, "inner").get<Polyhedron>();
  r.open_rows.clear();
  if (j.contains("open_rows")) {
    const json& rows = j.at("open_rows");
    if (!rows.is_array()) throw ParseError("open_rows must be an array");
    for (const auto& i : rows) {
      std::size_t k = detail::natural(i, "open row");
      if (k >= r.outer.rows.size()) throw ParseError("open row index out of range");
      r.open_rows.push_back(k);
    }
  }
  if (r.inner.dim != r.outer.dim) throw ParseError("region dimension mismatch");
}

// Reports.

inline json measure_json(const TargetMeasure& m) {
  json j{{"target", m.target}, {"cap_exceeded", !m.size.has_value()}};
  j["size"] = m.size ? json(*m.size) : json(nullptr);
  return j;
}

inline json report_json(const ComplexityReport& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  json facets = json::array(), validity = json::array(), reverse = json::array();
  for (const auto& f : r.facets) facets.push_back(measure_json(f));
  for (const auto& v : r.validity) validity.push_back(measure_json(v));
  for (const auto& v : r.reverse) reverse.push_back(measure_json(v));
  return json{{"instance", r.instance},
              {"relative_to", "move family"},
              {"facet", opt(r.facet)},
              {"facets", facets},
              {"hull", opt(r.hull)},
              {"validity", validity},
              {"reverse", reverse},
              {"membership", opt(r.membership)},
              {"facet_count", r.facet_count},
              {"nontrivial_facets", r.nontrivial_facets},
              {"cap_exceeded", r.cap_exceeded}};
}

// Documents and files.

/// Parses a JSON document, turning every syntax, type or shape problem into ParseError.
template <typename T>
T parse_document(const std::string& text) {
  try {
    return json::parse(text).get<T>();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

inline BCTree read_certificate(const std::filesystem::path& p) { return parse_document<BCTree>(read_file(p)); }
inline void write_certificate(const std::filesystem::path& p, const BCTree& t) { write_file(p, dump(json(t))); }

/// Writes instance.json, claims.json and one <goal>.json per certificate into dir.
inline void write_bundle(const std::filesystem::path& dir, const InstanceBundle& b) {
  std::filesystem::create_directories(dir);
  json inst{{"name", b.name},
            {"context", json{{"dim", b.ctx.dim}}},
            {"system", b.system},
            {"hull_target", b.hull_target},
            {"certificates", json::array()}};
  for (const auto& c : b.certificates) inst["certificates"].push_back(c.goal + ".json");
  write_file(dir / "instance.json", dump(inst));
  json claims = json::array();
  for (const auto& c : b.claimed_sizes) claims.push_back(json{{"goal", c.goal}, {"size", c.size}});
  write_file(dir / "claims.json", dump(json{{"claims", claims}}));
  for (const auto& c : b.certificates) write_certificate(dir / (c.goal + ".json"), c.tree);
}

inline InstanceBundle read_bundle(const std::filesystem::path& dir) {
  InstanceBundle b;
  try {
    json inst = json::parse(read_file(dir / "instance.json"));
    b.name = detail::text(detail::field(inst, "name"), "name");
    std::size_t dim = detail::natural(detail::field(detail::field(inst, "context"), "dim"), "context dim");
    if (dim < 1) throw ParseError("context dim must be at least 1");
    b.ctx = EmbeddingContext(dim);
    b.system = detail::field(inst, "system").get<Polyhedron>();
    b.hull_target = detail::field(inst, "hull_target").get<Polyhedron>();
    if (b.system.dim != dim || b.hull_target.dim != dim) throw ParseError("bundle dimension mismatch");
    const json& files = detail::field(inst, "certificates");
    if (!files.is_array()) throw ParseError("certificates must be an array");
    for (const auto& f : files) {
      std::string name = detail::text(f, "certificate file");
      if (name.size() < 6 || name.substr(name.size() - 5) != ".json" || name.find('/') != std::string::npos)
        throw ParseError("bad certificate file name '" + name + "'");
      b.certificates.push_back(NamedCertificate{name.substr(0, name.size() - 5), read_certificate(dir / name)});
    }
    json claims = json::parse(read_file(dir / "claims.json"));
    const json& list = detail::field(claims, "claims");
    if (!list.is_array()) throw ParseError("claims must be an array");
    for (const auto& c : list)
      b.claimed_sizes.push_back(
          Claim{detail::text(detail::field(c, "goal"), "goal"), detail::natural(detail::field(c, "size"), "size")});
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return b;
}

}  // namespace hellycert

#endif  // HELLYCERT_SERIALIZE_HPP
