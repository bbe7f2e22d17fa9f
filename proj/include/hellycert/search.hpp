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

#ifndef HELLYCERT_SEARCH_HPP
#define HELLYCERT_SEARCH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hellycert/bctree.hpp"
#include "hellycert/cuts.hpp"
#include "hellycert/instances.hpp"
#include "hellycert/parallel.hpp"
#include "hellycert/splitcover.hpp"

namespace hellycert {

/// Moves available to the search: branch disjunctions and CG sources.
struct MoveFamily {
  std::vector<Disjunction> disjunctions;  // split or variable kinds
  std::vector<Halfspace> cuts;            // candidate CG sources
  std::size_t depth_cap = 64;
  std::size_t size_cap = 15;
};

struct SearchResult {
  std::optional<std::size_t> size;
  std::optional<BCTree> tree;
  bool cap_exceeded = false;
  std::size_t explored = 0;  // distinct node polyhedra visited
};

namespace detail {

// Canonical split for a disjunction: alpha with first nonzero entry positive.
inline std::pair<RVec, Rational> canonical_split(const Disjunction& d) {
  RVec a = d.alpha;
  Rational b = d.beta;
  for (const auto& x : a) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) {
      a = -a;
      b = -b - 1;
    }
    break;
  }
  return {a, b};
}

class TreeSearch {
 public:
  TreeSearch(const Polyhedron& system, Goal goal, const MoveFamily& family)
      : system_(system), goal_(std::move(goal)), family_(family) {
    for (const auto& d : family.disjunctions) {
      if (d.kind == DisjunctionKind::general) throw Error("search accepts split and variable disjunctions only");
      std::string defect = disjunction_defect(d, system.dim);
      if (!defect.empty()) throw Error("family disjunction rejected: " + defect);
    }
    if (auto* h = std::get_if<HullGoal>(&goal_)) rows_ = h->target.rows;
    else if (auto* m = std::get_if<MembershipGoal>(&goal_)) rows_ = {m->separator};
    else if (auto* v = std::get_if<ValidityGoal>(&goal_)) rows_ = {v->target};
    else open_ = true;
    if (auto* m = std::get_if<MembershipGoal>(&goal_))
      if (dot(m->separator.normal, m->point) <= m->separator.rhs) throw Error("separator does not separate");
  }

  SearchResult run() {
    SearchResult out;
    Node root = make(system_);
    std::size_t depth = family_.depth_cap;
    for (std::size_t b = 1; b <= family_.size_cap; ++b) {
      if (auto s = solve(root, b, depth)) {
        out.size = *s;
        out.tree = BCTree{EmbeddingContext(system_.dim), system_, build(system_, depth), goal_};
        break;
      }
    }
    out.cap_exceeded = !out.size;
    out.explored = memo_.size();
    return out;
  }

 private:
  using Key = std::vector<RVec>;

  struct Node {
    Polyhedron hrep;
    Key verts;
  };

  enum class MoveKind { leaf, branch, cut };

  struct Entry {
    std::optional<std::size_t> exact;
    std::size_t lower = 1;
    MoveKind kind = MoveKind::leaf;
    std::size_t index = 0;
    std::optional<std::vector<std::optional<std::vector<Node>>>> kids;  // per move, lazily
  };

  static Node make(Polyhedron p) {
    Key v = vertices(p);
    return Node{std::move(p), std::move(v)};
  }

  static bool all_satisfy(const Key& verts, const Halfspace& h) {
    for (const auto& v : verts)
      if (!h.contains(v)) return false;
    return true;
  }

  bool leaf_ok(const Key& verts) const {
    if (verts.empty()) return true;
    if (open_) return false;
    for (const auto& r : rows_)
      if (!all_satisfy(verts, r)) return false;
    return true;
  }

  std::size_t move_count() const { return family_.disjunctions.size() + family_.cuts.size(); }

  // Children of move m at node, or nullopt when the move does not apply or cannot help.
  std::optional<std::vector<Node>> expand(const Node& node, std::size_t m) const {
    std::size_t nd = family_.disjunctions.size();
    std::vector<Node> kids;
    if (m < nd) {
      for (const auto& term : family_.disjunctions[m].terms()) {
        bool keeps_all = true;
        for (const auto& h : term) keeps_all = keeps_all && all_satisfy(node.verts, h);
        if (keeps_all) return std::nullopt;
        kids.push_back(make(intersect(node.hrep, term)));
      }
      return kids;
    }
    const Halfspace& src = family_.cuts[m - nd];
    if (node.verts.empty() || src.is_trivial() || !all_satisfy(node.verts, src)) return std::nullopt;
    Halfspace cut = cg_cut(src);
    if (all_satisfy(node.verts, cut)) return std::nullopt;
    kids.push_back(make(intersect(node.hrep, {cut})));
    return kids;
  }

  const std::vector<Node>* children(Entry& e, const Node& node, std::size_t m) {
    if (!e.kids) e.kids.emplace(move_count());
    auto& slot = (*e.kids)[m];
    if (!slot) {
      auto k = expand(node, m);
      slot.emplace(k ? std::move(*k) : std::vector<Node>{});
    }
    return slot->empty() ? nullptr : &*slot;
  }

  // Remaining depth only matters when it could cut off a tree within size_cap.
  std::size_t tag(std::size_t depth_left) const {
    return 2 * depth_left + 1 >= family_.size_cap ? unbounded : depth_left;
  }

  // Exact minimum size at node if it is at most budget, else nullopt.
  std::optional<std::size_t> solve(const Node& node, std::size_t budget, std::size_t depth_left) {
    Entry& e = memo_[{node.verts, tag(depth_left)}];
    if (e.exact) return *e.exact <= budget ? e.exact : std::nullopt;
    if (leaf_ok(node.verts)) {
      e.exact = 1;
      e.kind = MoveKind::leaf;
      return 1;
    }
    if (budget < e.lower) return std::nullopt;
    if (budget < 3 || depth_left == 0) {
      e.lower = std::max(e.lower, budget + 1);
      return std::nullopt;
    }
    std::optional<std::size_t> best;
    std::size_t limit = budget;
    std::size_t nd = family_.disjunctions.size();
    for (std::size_t m = 0; m < move_count() && limit >= 3; ++m) {
      const std::vector<Node>* kids = children(e, node, m);
      if (!kids) continue;
      std::size_t total = m < nd ? 1 : 2;
      bool ok = true;
      for (std::size_t j = 0; j < kids->size() && ok; ++j) {
        std::size_t rest = kids->size() - j - 1;
        if (total + 1 + rest > limit) {
          ok = false;
          break;
        }
        auto s = solve((*kids)[j], limit - total - rest, depth_left - 1);
        if (!s) ok = false;
        else total += *s;
      }
      if (!ok || total > limit) continue;
      best = total;
      e.kind = m < nd ? MoveKind::branch : MoveKind::cut;
      e.index = m;
      limit = total - 1;
    }
    if (best) {
      e.exact = best;
      return best;
    }
    e.lower = std::max(e.lower, budget + 1);
    return std::nullopt;
  }

  // Rebuild the chosen tree with certificates, following the stored moves.
  BCNode build(const Polyhedron& p, std::size_t depth_left) {
    Node node = make(p);
    if (leaf_ok(node.verts)) return leaf(leaf_evidence(p, goal_));
    auto it = memo_.find({node.verts, tag(depth_left)});
    if (it == memo_.end() || !it->second.exact) throw Error("search state missing for node");
    MoveKind kind = it->second.kind;
    std::size_t index = it->second.index;
    if (kind == MoveKind::branch) {
      const Disjunction& d = family_.disjunctions[index];
      std::vector<BCNode> kids;
      for (const auto& term : d.terms()) kids.push_back(build(intersect(p, term), depth_left - 1));
      return branch_node(d, std::move(kids));
    }
    CutStep step = build_cut_step(p, family_.cuts[index - family_.disjunctions.size()]);
    return cut_node(step, build(intersect(p, {step.cut}), depth_left - 1));
  }

  Polyhedron system_;
  Goal goal_;
  const MoveFamily& family_;
  std::vector<Halfspace> rows_;
  bool open_ = false;
  static constexpr std::size_t unbounded = static_cast<std::size_t>(-1);
  std::map<std::pair<Key, std::size_t>, Entry> memo_;
};

}  // namespace detail

/**
 * Smallest tree for goal over system whose branch nodes use the family's
 * disjunctions and whose cut nodes use CG steps from the family's sources.
 * Sizes are searched in increasing order up to size_cap; ties go to the
 * first move in family order.
 */
inline SearchResult min_tree(const Polyhedron& system, const Goal& goal, const MoveFamily& family) {
  if (family.size_cap < 1 || family.depth_cap < 1) throw Error("family caps must be at least 1");
  return detail::TreeSearch(system, goal, family).run();
}

/// Variable disjunctions x_i <= b or x_i >= b+1 for every b that separates two lattice layers of the system.
inline std::vector<Disjunction> variable_family(const Polyhedron& system) {
  auto verts = vertices(system);
  std::vector<Disjunction> out;
  if (verts.empty()) return out;
  for (std::size_t i = 0; i < system.dim; ++i) {
    Rational lo = verts[0][i], hi = verts[0][i];
    for (const auto& v : verts) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    for (Integer b = lo.floor(); Rational(b) < hi; ++b) out.push_back(Disjunction::variable(system.dim, i, Rational(b)));
  }
  return out;
}

/// Adds the split H or its tightened complement for each target, skipping duplicates.
inline void add_target_splits(std::vector<Disjunction>& ds, const std::vector<Halfspace>& targets) {
  std::vector<std::pair<RVec, Rational>> seen;
  for (const auto& d : ds) seen.push_back(detail::canonical_split(d));
  for (const auto& t : targets) {
    if (t.is_trivial()) continue;
    Halfspace n = normalize_integral(t);
    Disjunction d = Disjunction::split(n.normal, Rational(Integer(n.rhs.floor())));
    auto key = detail::canonical_split(d);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    ds.push_back(std::move(d));
  }
}

/// Every split with |alpha_i| <= alpha_max and integer beta in [beta_min, beta_max].
inline std::vector<Disjunction> split_disjunction_family(std::size_t n, long alpha_max, long beta_min, long beta_max) {
  std::vector<Disjunction> out;
  for (const auto& g : split_family(n, alpha_max, Rational(beta_min), Rational(beta_max)))
    out.push_back(Disjunction::split(g.alpha, g.beta));
  return out;
}

struct TargetMeasure {
  Halfspace target;
  std::optional<std::size_t> size;  // nullopt when the cap was hit
  std::optional<BCTree> tree;
};

/// Family-relative complexities of an instance; every value is witnessed by a stored tree.
struct ComplexityReport {
  std::string instance;
  std::vector<TargetMeasure> facets;
  std::optional<std::size_t> facet;  // max over facets
  std::optional<std::size_t> hull;
  std::optional<BCTree> hull_tree;
  std::vector<TargetMeasure> validity;
  std::vector<TargetMeasure> reverse;
  std::optional<std::size_t> membership;  // max over witnesses
  std::optional<BCTree> membership_tree;
  std::size_t facet_count = 0;
  std::size_t nontrivial_facets = 0;  // facets not valid for the system
  bool cap_exceeded = false;
};

/// Targets measured for a bundle: the nontrivial hull rows, then any other validity goals of its certificates.
inline std::vector<Halfspace> report_targets(const InstanceBundle& b) {
  std::vector<Halfspace> out;
  for (const auto& r : b.hull_target.rows)
    if (!r.is_trivial()) out.push_back(r);
  for (const auto& c : b.certificates)
    if (auto* v = std::get_if<ValidityGoal>(&c.tree.goal))
      if (std::find(out.begin(), out.end(), v->target) == out.end()) out.push_back(v->target);
  return out;
}

/// Family with the bundle's variable disjunctions, a split per target and the system rows as CG sources.
inline MoveFamily standard_family(const InstanceBundle& b, bool with_disjunctions = true) {
  MoveFamily f;
  if (with_disjunctions) {
    f.disjunctions = variable_family(b.system);
    add_target_splits(f.disjunctions, report_targets(b));
  }
  f.cuts = b.system.rows;
  return f;
}

/// One point beyond each facet of a full-dimensional hull target, violating that facet only.
inline std::vector<RVec> facet_witnesses(const Polyhedron& hull_target) {
  auto verts = vertices(hull_target);
  std::vector<RVec> out;
  if (verts.empty()) return out;
  for (std::size_t j = 0; j < hull_target.rows.size(); ++j) out.push_back(facet_exterior_point(hull_target, verts, j));
  return out;
}

/**
 * Runs min_tree for the hull, every target's validity and reverse instance,
 * and membership of every witness with separators taken from the hull rows
 * the witness violates.
 */
inline ComplexityReport complexity_report(const InstanceBundle& b, const MoveFamily& family,
                                          const std::vector<RVec>& witnesses,
                                          std::size_t threads = thread_count()) {
  ComplexityReport rep;
  rep.instance = b.name;
  std::vector<Halfspace> targets = report_targets(b);
  std::vector<Halfspace> facet_rows;
  for (const auto& r : b.hull_target.rows)
    if (!r.is_trivial()) facet_rows.push_back(r);

  struct Job {
    Polyhedron system;
    Goal goal;
  };
  std::vector<Job> jobs;
  jobs.push_back(Job{b.system, HullGoal{b.hull_target}});
  for (const auto& t : targets) jobs.push_back(Job{b.system, ValidityGoal{t}});
  for (const auto& t : targets) jobs.push_back(Job{reverse_instance(b.system, t, b.ctx), InfeasibilityGoal{}});
  std::vector<std::size_t> witness_of;
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    if (witnesses[w].size() != b.system.dim) throw Error("witness dimension mismatch");
    if (b.hull_target.contains(witnesses[w])) throw Error("witness point lies in the hull target");
    for (const auto& r : facet_rows) {
      if (dot(r.normal, witnesses[w]) <= r.rhs) continue;
      jobs.push_back(Job{b.system, MembershipGoal{witnesses[w], r}});
      witness_of.push_back(w);
    }
  }
  auto results = parallel_map<SearchResult>(
      jobs.size(), [&](std::size_t i) { return min_tree(jobs[i].system, jobs[i].goal, family); }, threads);
  for (const auto& r : results) rep.cap_exceeded = rep.cap_exceeded || r.cap_exceeded;

  rep.hull = results[0].size;
  rep.hull_tree = results[0].tree;
  std::size_t k = 1;
  for (const auto& t : targets) rep.validity.push_back(TargetMeasure{t, results[k].size, results[k].tree}), ++k;
  for (const auto& t : targets) rep.reverse.push_back(TargetMeasure{t, results[k].size, results[k].tree}), ++k;

  rep.facet_count = facet_rows.size();
  for (const auto& r : facet_rows) {
    for (const auto& v : rep.validity)
      if (v.target == r) rep.facets.push_back(v);
    if (!extract_dominance(b.system, r).cert) ++rep.nontrivial_facets;
  }
  if (!rep.facets.empty()) {
    rep.facet = 0;
    for (const auto& f : rep.facets) {
      if (!f.size) {
        rep.facet.reset();
        break;
      }
      rep.facet = std::max(*rep.facet, *f.size);
    }
  }

  std::vector<std::optional<std::size_t>> per_witness(witnesses.size());
  std::vector<std::optional<BCTree>> tree_of(witnesses.size());
  for (std::size_t j = 0; k < results.size(); ++k, ++j) {
    std::size_t w = witness_of[j];
    if (!results[k].size) continue;
    if (!per_witness[w] || *results[k].size < *per_witness[w]) {
      per_witness[w] = results[k].size;
      tree_of[w] = results[k].tree;
    }
  }
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    if (!per_witness[w]) {
      rep.cap_exceeded = true;
      continue;
    }
    if (!rep.membership || *per_witness[w] > *rep.membership) {
      rep.membership = per_witness[w];
      rep.membership_tree = tree_of[w];
    }
  }
  return rep;
}

}  // namespace hellycert

#endif  // HELLYCERT_SEARCH_HPP
