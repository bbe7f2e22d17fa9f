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

#ifndef HELLYCERT_BCTREE_HPP
#define HELLYCERT_BCTREE_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hellycert/certificates.hpp"
#include "hellycert/cuts.hpp"
#include "hellycert/geometry.hpp"
#include "hellycert/lp.hpp"

namespace hellycert {

enum class DisjunctionKind { split, variable, general };

/**
 * A branching rule. Split and variable kinds carry (alpha, beta) and derive
 * their two terms {alpha.x <= beta} and {alpha.x >= beta+1}; the general kind
 * carries explicit terms.
 */
struct Disjunction {
  DisjunctionKind kind = DisjunctionKind::split;
  RVec alpha;
  Rational beta;
  std::size_t index = 0;
  std::vector<std::vector<Halfspace>> general_terms;

  static Disjunction split(RVec alpha, Rational beta) {
    Disjunction d;
    d.kind = DisjunctionKind::split;
    d.alpha = std::move(alpha);
    d.beta = std::move(beta);
    return d;
  }
  static Disjunction variable(std::size_t dim, std::size_t i, Rational beta) {
    if (i >= dim) throw Error("variable index out of range");
    Disjunction d;
    d.kind = DisjunctionKind::variable;
    d.alpha = unit_vector(dim, i);
    d.index = i;
    d.beta = std::move(beta);
    return d;
  }
  static Disjunction general(std::vector<std::vector<Halfspace>> terms) {
    Disjunction d;
    d.kind = DisjunctionKind::general;
    d.general_terms = std::move(terms);
    return d;
  }

  std::vector<std::vector<Halfspace>> terms() const {
    if (kind == DisjunctionKind::general) return general_terms;
    return {{Halfspace{alpha, beta}}, {Halfspace{-alpha, -(beta + 1)}}};
  }

  friend bool operator==(const Disjunction&, const Disjunction&) = default;
};

struct Branch {
  Disjunction disjunction;
  friend bool operator==(const Branch&, const Branch&) = default;
};
struct Cut {
  CutStep step;
  friend bool operator==(const Cut&, const Cut&) = default;
};
struct LeafEmpty {
  friend bool operator==(const LeafEmpty&, const LeafEmpty&) = default;
};
struct LeafFarkas {
  FarkasCert cert;
  friend bool operator==(const LeafFarkas&, const LeafFarkas&) = default;
};
struct LeafDominance {
  std::vector<DominanceCert> certs;
  friend bool operator==(const LeafDominance&, const LeafDominance&) = default;
};

using SecondLabel = std::variant<Branch, Cut, LeafEmpty, LeafFarkas, LeafDominance>;

/// first_label holds only the constraints this node adds to its parent's set.
struct BCNode {
  std::vector<Halfspace> first_label;
  SecondLabel label = LeafEmpty{};
  std::vector<BCNode> children;
  friend bool operator==(const BCNode&, const BCNode&) = default;
};

struct InfeasibilityGoal {
  friend bool operator==(const InfeasibilityGoal&, const InfeasibilityGoal&) = default;
};
struct HullGoal {
  Polyhedron target;
  friend bool operator==(const HullGoal&, const HullGoal&) = default;
};
struct MembershipGoal {
  RVec point;
  Halfspace separator;
  friend bool operator==(const MembershipGoal&, const MembershipGoal&) = default;
};
struct ValidityGoal {
  Halfspace target;
  friend bool operator==(const ValidityGoal&, const ValidityGoal&) = default;
};

using Goal = std::variant<InfeasibilityGoal, HullGoal, MembershipGoal, ValidityGoal>;

struct BCTree {
  EmbeddingContext ctx{1};
  Polyhedron root_system;
  BCNode root;
  Goal goal = InfeasibilityGoal{};
  friend bool operator==(const BCTree&, const BCTree&) = default;
};

using NodePath = std::vector<std::size_t>;

inline std::string path_string(const NodePath& path) {
  std::string s = "root";
  for (auto i : path) s += "/" + std::to_string(i);
  return s;
}

inline std::string goal_name(const Goal& g) {
  switch (g.index()) {
    case 0: return "infeasibility";
    case 1: return "hull";
    case 2: return "membership";
    default: return "validity";
  }
}

// ---------------------------------------------------------------------------
// Construction helpers

inline BCNode leaf(SecondLabel label) { return BCNode{{}, std::move(label), {}}; }

/// Cut node whose left child is the certifier leaf and right child continues with `rest`.
inline BCNode cut_node(const CutStep& step, BCNode rest) {
  BCNode certifier{{tighten_complement(step.cut, EmbeddingContext(step.cut.dim()))},
                   LeafFarkas{step.certifier},
                   {}};
  rest.first_label = {step.cut};
  BCNode n;
  n.label = Cut{step};
  n.children.push_back(std::move(certifier));
  n.children.push_back(std::move(rest));
  return n;
}

inline BCNode branch_node(const Disjunction& d, std::vector<BCNode> kids) {
  auto terms = d.terms();
  if (kids.size() != terms.size()) throw Error("branch child count does not match disjunction");
  for (std::size_t j = 0; j < kids.size(); ++j) kids[j].first_label = terms[j];
  return BCNode{{}, Branch{d}, std::move(kids)};
}

/**
 * Leaf evidence for `poly` under `goal`: a Farkas certificate when poly is
 * empty, otherwise dominance certificates for each target row. Throws if the
 * leaf does not satisfy the goal.
 */
inline SecondLabel leaf_evidence(const Polyhedron& poly, const Goal& goal) {
  FarkasOutcome f = extract_farkas(poly);
  if (f.cert) return LeafFarkas{*f.cert};
  std::vector<Halfspace> rows;
  if (auto* h = std::get_if<HullGoal>(&goal)) rows = h->target.rows;
  else if (auto* m = std::get_if<MembershipGoal>(&goal)) rows = {m->separator};
  else if (auto* v = std::get_if<ValidityGoal>(&goal)) rows = {v->target};
  else throw Error("leaf is not empty");
  LeafDominance out;
  for (const auto& r : rows) {
    DominanceOutcome d = extract_dominance(poly, r);
    if (!d.cert) throw Error("leaf not contained in target row " + to_string(r));
    out.certs.push_back(*d.cert);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Navigation and measures

inline const BCNode& node_at(const BCTree& t, const NodePath& path) {
  const BCNode* n = &t.root;
  for (auto i : path) {
    if (i >= n->children.size()) throw Error("invalid path " + path_string(path));
    n = &n->children[i];
  }
  return *n;
}

inline Polyhedron node_polyhedron(const BCTree& t, const NodePath& path) {
  Polyhedron p = intersect(t.root_system, t.root.first_label);
  const BCNode* n = &t.root;
  for (auto i : path) {
    if (i >= n->children.size()) throw Error("invalid path " + path_string(path));
    n = &n->children[i];
    p = intersect(std::move(p), n->first_label);
  }
  return p;
}

inline std::size_t count_nodes(const BCNode& n) {
  std::size_t c = 1;
  for (const auto& k : n.children) c += count_nodes(k);
  return c;
}

inline std::size_t count_leaves(const BCNode& n) {
  if (n.children.empty()) return 1;
  std::size_t c = 0;
  for (const auto& k : n.children) c += count_leaves(k);
  return c;
}

/// Size: total node count. Certifier leaves are nodes of their own.
inline std::size_t tree_size(const BCTree& t) { return count_nodes(t.root); }

/// Node count plus the support of every Farkas certificate in the tree.
inline std::size_t tree_complexity(const BCTree& t) {
  std::function<std::size_t(const BCNode&)> rec = [&](const BCNode& n) {
    std::size_t c = 1;
    if (auto* f = std::get_if<LeafFarkas>(&n.label)) c += f->cert.support();
    for (const auto& k : n.children) c += rec(k);
    return c;
  };
  return rec(t.root);
}

// ---------------------------------------------------------------------------
// Checking

namespace detail {

inline Verdict reject_at(const NodePath& path, const std::string& why, std::size_t work) {
  return Verdict::reject("at " + path_string(path) + ": " + why, work);
}

// Empty string when d is a valid lattice disjunction in dimension n.
inline std::string disjunction_defect(const Disjunction& d, std::size_t n) {
  if (d.kind == DisjunctionKind::general) {
    if (d.general_terms.size() != 2 || d.general_terms[0].size() != 1 ||
        d.general_terms[1].size() != 1)
      return "general disjunction is not split-shaped";
    const Halfspace& h1 = d.general_terms[0][0];
    const Halfspace& h2 = d.general_terms[1][0];
    if (h1.dim() != n || h2.dim() != n) return "disjunction dimension mismatch";
    if (h1.is_trivial() || h2.is_trivial()) return "general disjunction is not split-shaped";
    Halfspace a = normalize_integral(h1), b = normalize_integral(h2);
    if (a.normal != -b.normal) return "general disjunction is not split-shaped";
    // Terms a.x <= b1 and a.x >= c cover Z^n iff c <= floor(b1) + 1.
    if (-b.rhs > Rational(Integer(a.rhs.floor() + 1))) return "general disjunction terms leave lattice points uncovered";
    return {};
  }
  if (d.alpha.size() != n) return "disjunction dimension mismatch";
  if (d.kind == DisjunctionKind::variable && (d.index >= n || d.alpha != unit_vector(n, d.index)))
    return "variable disjunction does not match its index";
  if (is_zero(d.alpha)) return "split normal is zero";
  if (!is_integral(d.alpha)) return "split normal is not integral";
  if (primitive_scale(d.alpha) != Rational(1)) return "split normal is not coprime";
  if (!d.beta.is_integer()) return "non-integer split offset is a g-split, not a valid disjunction";
  return {};
}

struct Walk {
  const BCTree& tree;
  std::size_t work = 0;
  std::size_t nodes = 0;
  std::size_t leaves = 0;

  Verdict fail(const NodePath& path, const std::string& why) { return reject_at(path, why, work); }

  Verdict visit(const BCNode& node, const Polyhedron& poly, NodePath& path) {
    ++nodes;
    ++work;
    const std::size_t n = tree.ctx.dim;
    for (const auto& h : node.first_label)
      if (h.dim() != n) return fail(path, "first label dimension mismatch");

    if (auto* b = std::get_if<Branch>(&node.label)) {
      std::string defect = disjunction_defect(b->disjunction, n);
      if (!defect.empty()) return fail(path, defect);
      auto terms = b->disjunction.terms();
      if (node.children.size() != terms.size())
        return fail(path, "branch node has " + std::to_string(node.children.size()) +
                              " children, disjunction has " + std::to_string(terms.size()) + " terms");
      for (std::size_t j = 0; j < terms.size(); ++j) {
        path.push_back(j);
        if (node.children[j].first_label != terms[j]) return fail(path, "child label does not match disjunction term");
        Verdict v = visit(node.children[j], intersect(poly, node.children[j].first_label), path);
        if (!v) return v;
        path.pop_back();
      }
      return Verdict::accept(work);
    }

    if (auto* c = std::get_if<Cut>(&node.label)) {
      const CutStep& s = c->step;
      if (s.source.dim() != n || s.cut.dim() != n) return fail(path, "cut dimension mismatch");
      if (s.source.is_trivial()) return fail(path, "cut source is trivial");
      if (s.cut != cg_cut(s.source)) return fail(path, "cut is not the CG strengthening of its source");
      if (s.source_evidence.target != s.source) return fail(path, "source evidence proves a different halfspace");
      Verdict dv = check_dominance(poly, s.source_evidence);
      work += dv.work;
      if (!dv) return fail(path, "source halfspace not valid for node: " + dv.reason);
      Halfspace comp = tighten_complement(s.cut, tree.ctx);
      Polyhedron rest = intersect(poly, {comp});
      Verdict fv = check_farkas(rest, s.certifier);
      work += fv.work;
      if (!fv) return fail(path, "cut certifier rejected: " + fv.reason);
      if (node.children.size() != 2) return fail(path, "cut node must have two children");
      path.push_back(0);
      const BCNode& cert_leaf = node.children[0];
      ++nodes;
      ++leaves;
      ++work;
      if (!cert_leaf.children.empty()) return fail(path, "certifier leaf has children");
      if (cert_leaf.first_label != std::vector<Halfspace>{comp})
        return fail(path, "certifier label is not the tightened complement of the cut");
      auto* lf = std::get_if<LeafFarkas>(&cert_leaf.label);
      if (!lf) return fail(path, "certifier leaf carries no Farkas certificate");
      Verdict lv = check_farkas(rest, lf->cert);
      work += lv.work;
      if (!lv) return fail(path, "certifier leaf rejected: " + lv.reason);
      path.back() = 1;
      const BCNode& right = node.children[1];
      if (right.first_label != std::vector<Halfspace>{s.cut}) return fail(path, "right child label is not the cut");
      Verdict v = visit(right, intersect(poly, {s.cut}), path);
      if (!v) return v;
      path.pop_back();
      return Verdict::accept(work);
    }

    ++leaves;
    if (!node.children.empty()) return fail(path, "leaf has children");
    return Verdict::accept(work);
  }
};

}  // namespace detail

/// Checks every node invariant, every disjunction, and every cut certifier.
inline Verdict check_structure(const BCTree& t) {
  if (t.root_system.dim != t.ctx.dim) return Verdict::reject("system dimension does not match context", 0);
  if (!t.root.first_label.empty()) return Verdict::reject("at root: root first label must be empty", 0);
  detail::Walk w{t};
  NodePath path;
  Verdict v = w.visit(t.root, t.root_system, path);
  if (!v) return v;
  if (w.nodes > 2 * w.leaves)
    return Verdict::reject("node count " + std::to_string(w.nodes) + " exceeds twice the leaf count", w.work);
  return Verdict::accept(w.work);
}

namespace detail {

// Calls fn(node, poly, path) on every leaf that is not a cut certifier.
inline void for_each_goal_leaf(const BCTree& t,
                               const std::function<bool(const BCNode&, const Polyhedron&, const NodePath&)>& fn) {
  NodePath path;
  bool stop = false;
  std::function<void(const BCNode&, const Polyhedron&)> rec = [&](const BCNode& n, const Polyhedron& p) {
    if (stop) return;
    if (n.children.empty()) {
      if (!fn(n, p, path)) stop = true;
      return;
    }
    bool is_cut = std::holds_alternative<Cut>(n.label);
    for (std::size_t j = is_cut ? 1 : 0; j < n.children.size() && !stop; ++j) {
      path.push_back(j);
      rec(n.children[j], intersect(p, n.children[j].first_label));
      if (!stop) path.pop_back();
    }
  };
  rec(t.root, t.root_system);
}

// Leaves must be empty (LeafFarkas) or carry one dominance certificate per row.
inline Verdict check_leaves_against(const BCTree& t, const std::vector<Halfspace>* rows, Verdict structure) {
  std::size_t work = structure.work;
  Verdict out = Verdict::accept(0);
  for_each_goal_leaf(t, [&](const BCNode& n, const Polyhedron& p, const NodePath& path) {
    if (std::holds_alternative<LeafEmpty>(n.label)) {
      out = reject_at(path, "placeholder leaf carries no evidence", work);
      return false;
    }
    if (auto* f = std::get_if<LeafFarkas>(&n.label)) {
      Verdict v = check_farkas(p, f->cert);
      work += v.work;
      if (!v) {
        out = reject_at(path, "leaf Farkas certificate rejected: " + v.reason, work);
        return false;
      }
      return true;
    }
    auto* d = std::get_if<LeafDominance>(&n.label);
    if (!d) {
      out = reject_at(path, "unexpected label on leaf", work);
      return false;
    }
    if (!rows) {
      out = reject_at(path, "leaf set is not certified empty", work);
      return false;
    }
    if (d->certs.size() != rows->size()) {
      out = reject_at(path, "leaf has " + std::to_string(d->certs.size()) + " dominance certificates, target has " +
                                std::to_string(rows->size()) + " rows",
                      work);
      return false;
    }
    for (std::size_t i = 0; i < rows->size(); ++i) {
      if (d->certs[i].target != (*rows)[i]) {
        out = reject_at(path, "dominance certificate " + std::to_string(i) + " targets a different row", work);
        return false;
      }
      Verdict v = check_dominance(p, d->certs[i]);
      work += v.work;
      if (!v) {
        out = reject_at(path, "target row " + std::to_string(i) + " not implied: " + v.reason, work);
        return false;
      }
    }
    return true;
  });
  if (!out) return out;
  return Verdict::accept(work);
}

}  // namespace detail

inline Verdict check_infeasibility(const BCTree& t) {
  if (!std::holds_alternative<InfeasibilityGoal>(t.goal)) return Verdict::reject("goal is not infeasibility", 0);
  Verdict s = check_structure(t);
  if (!s) return s;
  return detail::check_leaves_against(t, nullptr, s);
}

inline Verdict check_hull(const BCTree& t) {
  auto* g = std::get_if<HullGoal>(&t.goal);
  if (!g) return Verdict::reject("goal is not hull", 0);
  if (g->target.dim != t.ctx.dim) return Verdict::reject("hull target dimension mismatch", 0);
  Verdict s = check_structure(t);
  if (!s) return s;
  return detail::check_leaves_against(t, &g->target.rows, s);
}

inline Verdict check_validity(const BCTree& t) {
  auto* g = std::get_if<ValidityGoal>(&t.goal);
  if (!g) return Verdict::reject("goal is not validity", 0);
  if (g->target.dim() != t.ctx.dim) return Verdict::reject("validity target dimension mismatch", 0);
  Verdict s = check_structure(t);
  if (!s) return s;
  std::vector<Halfspace> rows = {g->target};
  return detail::check_leaves_against(t, &rows, s);
}

inline Verdict check_membership(const BCTree& t) {
  auto* g = std::get_if<MembershipGoal>(&t.goal);
  if (!g) return Verdict::reject("goal is not membership", 0);
  if (g->point.size() != t.ctx.dim || g->separator.dim() != t.ctx.dim)
    return Verdict::reject("membership data dimension mismatch", 0);
  if (dot(g->separator.normal, g->point) <= g->separator.rhs)
    return Verdict::reject("separator does not separate", 1);
  Verdict s = check_structure(t);
  if (!s) return s;
  std::vector<Halfspace> rows = {g->separator};
  return detail::check_leaves_against(t, &rows, s);
}

/// Dispatches on the tree's goal.
inline Verdict check_goal(const BCTree& t) {
  switch (t.goal.index()) {
    case 0: return check_infeasibility(t);
    case 1: return check_hull(t);
    case 2: return check_membership(t);
    default: return check_validity(t);
  }
}

/// system with the tightened complement of h: the instance a reverse certificate refutes.
inline Polyhedron reverse_instance(const Polyhedron& system, const Halfspace& h, const EmbeddingContext& ctx) {
  return intersect(system, {tighten_complement(h, ctx)});
}

/**
 * Validity tree for h from an infeasibility tree of reverse_instance(system, h):
 * branch on the split {a.x <= floor(b)} or {a.x >= floor(b)+1}, close the
 * left side by dominance and graft the reverse tree on the right. Size grows by 2.
 */
inline BCTree validity_from_reverse(const BCTree& reverse, const Polyhedron& system, const Halfspace& h) {
  Halfspace n = normalize_integral(h);
  Disjunction d = Disjunction::split(n.normal, Rational(Integer(n.rhs.floor())));
  BCTree t{reverse.ctx, system, {}, ValidityGoal{h}};
  BCNode left = leaf(leaf_evidence(intersect(system, d.terms()[0]), t.goal));
  t.root = branch_node(d, {std::move(left), reverse.root});
  return t;
}

}  // namespace hellycert

#endif  // HELLYCERT_BCTREE_HPP
