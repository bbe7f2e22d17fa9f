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

#ifndef HELLYCERT_INSTANCES_HPP
#define HELLYCERT_INSTANCES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hellycert/bctree.hpp"
#include "hellycert/cuts.hpp"
#include "hellycert/geometry.hpp"
#include "hellycert/lp.hpp"

namespace hellycert {

struct NamedCertificate {
  std::string goal;  // "hull", "facet-<i>", "validity", "infeasibility"
  BCTree tree;
};

struct Claim {
  std::string goal;
  std::size_t size = 0;
};

/// An instance P' (system), the hull of its lattice points, and certificates with claimed sizes.
struct InstanceBundle {
  std::string name;
  EmbeddingContext ctx{1};
  Polyhedron system;
  Polyhedron hull_target;
  std::vector<NamedCertificate> certificates;
  std::vector<Claim> claimed_sizes;

  const BCTree& certificate(const std::string& goal) const {
    for (const auto& c : certificates)
      if (c.goal == goal) return c.tree;
    throw Error("bundle has no certificate for " + goal);
  }
  void add(std::string goal, BCTree tree) {
    claimed_sizes.push_back(Claim{goal, tree_size(tree)});
    certificates.push_back(NamedCertificate{std::move(goal), std::move(tree)});
  }
};

/// Accepts iff every certificate verifies and every claimed size matches its tree.
inline Verdict verify_bundle(const InstanceBundle& b) {
  std::size_t work = 0;
  for (const auto& c : b.certificates) {
    Verdict v = check_goal(c.tree);
    work += v.work;
    if (!v) return Verdict::reject(c.goal + ": " + v.reason, work);
    bool claimed = false;
    for (const auto& cl : b.claimed_sizes) {
      if (cl.goal != c.goal) continue;
      claimed = true;
      if (cl.size != tree_size(c.tree))
        return Verdict::reject(c.goal + ": claimed size " + std::to_string(cl.size) + " but tree has " +
                                   std::to_string(tree_size(c.tree)),
                               work);
    }
    if (!claimed) return Verdict::reject(c.goal + ": no claimed size", work);
  }
  return Verdict::accept(work);
}

namespace detail {

// Cut chain on `system`, one CG step per source, closed by leaf evidence for `goal`.
inline BCNode cut_chain(const Polyhedron& system, const std::vector<Halfspace>& sources, const Goal& goal) {
  std::vector<CutStep> steps;
  Polyhedron p = system;
  for (const auto& s : sources) {
    steps.push_back(build_cut_step(p, s));
    p = intersect(std::move(p), {steps.back().cut});
  }
  BCNode node = leaf(leaf_evidence(p, goal));
  for (std::size_t i = steps.size(); i-- > 0;) node = cut_node(steps[i], std::move(node));
  return node;
}

// Branch chain: each disjunction's first term is closed as a leaf, the second continues.
inline BCNode branch_chain(const Polyhedron& system, const std::vector<Disjunction>& ds, const Goal& goal) {
  Polyhedron p = system;
  std::vector<Polyhedron> lefts;
  for (const auto& d : ds) {
    auto terms = d.terms();
    lefts.push_back(intersect(p, terms[0]));
    p = intersect(std::move(p), terms[1]);
  }
  BCNode node = leaf(leaf_evidence(p, goal));
  for (std::size_t i = ds.size(); i-- > 0;)
    node = branch_node(ds[i], {leaf(leaf_evidence(lefts[i], goal)), std::move(node)});
  return node;
}

inline BCTree make_tree(const Polyhedron& system, Goal goal, BCNode root) {
  return BCTree{EmbeddingContext(system.dim), system, std::move(root), std::move(goal)};
}

}  // namespace detail

/**
 * Variable-branching infeasibility tree: branch on the first fractional
 * coordinate of an LP point until every leaf is empty. Throws if the
 * system contains a lattice point.
 */
inline BCNode branch_until_empty(const Polyhedron& p) {
  FarkasOutcome f = extract_farkas(p);
  if (f.cert) return leaf(LeafFarkas{*f.cert});
  const RVec& x = *f.witness;
  for (std::size_t i = 0; i < p.dim; ++i) {
    if (x[i].is_integer()) continue;
    Disjunction d = Disjunction::variable(p.dim, i, Rational(Integer(x[i].floor())));
    auto terms = d.terms();
    return branch_node(d, {branch_until_empty(intersect(p, terms[0])), branch_until_empty(intersect(p, terms[1]))});
  }
  throw Error("system contains the lattice point " + to_string(x));
}

/// P' = [-1/2, 3/2+2n]^n with P_I = [0, 2n+1]^n.
inline InstanceBundle gen_box(std::size_t n) {
  if (n < 1) throw Error("n must be at least 1");
  InstanceBundle b;
  b.name = "box-" + std::to_string(n);
  b.ctx = EmbeddingContext(n);
  b.system = box(n, Rational(Integer(-1), Integer(2)), Rational(Integer(3), Integer(2)) + Rational(2 * static_cast<long>(n)));
  b.hull_target = box(n, Rational(0), Rational(2 * static_cast<long>(n) + 1));
  Goal hull = HullGoal{b.hull_target};
  b.add("hull", detail::make_tree(b.system, hull, detail::cut_chain(b.system, b.system.rows, hull)));
  for (std::size_t i = 0; i < b.hull_target.rows.size(); ++i) {
    Goal g = ValidityGoal{b.hull_target.rows[i]};
    b.add("facet-" + std::to_string(i),
          detail::make_tree(b.system, g, detail::cut_chain(b.system, {b.system.rows[i]}, g)));
  }
  return b;
}

/// P' = [1/(2n), 2+n-1/(2n)]^n with P_I = [1, n+1]^n and the target sum x >= n.
inline InstanceBundle gen_simplex_validity(std::size_t n) {
  if (n < 1) throw Error("n must be at least 1");
  InstanceBundle b;
  b.name = "simplex-" + std::to_string(n);
  b.ctx = EmbeddingContext(n);
  Rational eps(Integer(1), Integer(2 * static_cast<long>(n)));
  b.system = box(n, eps, Rational(2 + static_cast<long>(n)) - eps);
  b.hull_target = box(n, Rational(1), Rational(static_cast<long>(n) + 1));
  Goal v = ValidityGoal{geq(RVec(n, Rational(1)), Rational(static_cast<long>(n)))};
  std::vector<Disjunction> ds;
  for (std::size_t i = 0; i < n; ++i) ds.push_back(Disjunction::variable(n, i, Rational(0)));
  b.add("validity", detail::make_tree(b.system, v, detail::branch_chain(b.system, ds, v)));
  for (std::size_t i = 0; i < b.hull_target.rows.size(); ++i) {
    Goal g = ValidityGoal{b.hull_target.rows[i]};
    b.add("facet-" + std::to_string(i),
          detail::make_tree(b.system, g, detail::cut_chain(b.system, {b.system.rows[i]}, g)));
  }
  return b;
}

/// The reverse instance of the simplex target: P' with sum x <= n-1.
inline Polyhedron simplex_reverse_system(std::size_t n) {
  InstanceBundle b = gen_simplex_validity(n);
  const auto& g = std::get<ValidityGoal>(b.certificate("validity").goal);
  return reverse_instance(b.system, g.target, b.ctx);
}

/**
 * Centroid of the vertices on row j of a bounded polytope, pushed outward
 * along the row normal by half the step at which another row becomes tight
 * (by 1 if no row limits the step). The result violates row j only.
 */
inline RVec facet_exterior_point(const Polyhedron& p, const std::vector<RVec>& verts, std::size_t j) {
  const Halfspace& f = p.rows.at(j);
  RVec c = zeros(p.dim);
  std::size_t count = 0;
  for (const auto& v : verts) {
    if (dot(f.normal, v) != f.rhs) continue;
    c = c + v;
    ++count;
  }
  if (count == 0) throw Error("row does not touch the polytope");
  c = Rational(Integer(1), Integer(static_cast<unsigned long>(count))) * c;
  std::optional<Rational> step;
  for (std::size_t k = 0; k < p.rows.size(); ++k) {
    if (k == j) continue;
    Rational rate = dot(p.rows[k].normal, f.normal);
    if (rate.sign() <= 0) continue;
    Rational t = (p.rows[k].rhs - dot(p.rows[k].normal, c)) / rate;
    if (!step || t < *step) step = t;
  }
  Rational lambda = step ? *step / 2 : Rational(1);
  if (lambda.sign() <= 0) throw Error("row is not a facet");
  return c + lambda * f.normal;
}

/// Lattice octagon used as the default base polygon.
inline std::vector<RVec> octagon() {
  std::vector<std::pair<long, long>> pts = {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}};
  std::vector<RVec> out;
  for (auto [x, y] : pts) out.push_back(RVec{Rational(x), Rational(y)});
  return out;
}

inline std::vector<RVec> unit_square() {
  return {RVec{Rational(0), Rational(0)}, RVec{Rational(1), Rational(0)}, RVec{Rational(1), Rational(1)},
          RVec{Rational(0), Rational(1)}};
}

/**
 * P^(n) = conv((B x [0,1]^{n-2}) ∪ {v_1, ...}) for an integral convex polygon B,
 * with one point v_j per edge of B: the edge midpoint pushed outward along the
 * edge normal, lifted with coordinates 1/2. Hull target is B x [0,1]^{n-2}.
 */
inline InstanceBundle gen_lifted(const std::vector<RVec>& base, std::size_t n) {
  if (n < 3) throw Error("lifted example needs n >= 3");
  for (const auto& v : base)
    if (v.size() != 2 || !is_integral(v)) throw Error("base vertices must be integral points in the plane");
  Polyhedron poly = convex_hull(base, 2);
  auto corners = vertices(poly);
  std::vector<RVec> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 3 || corners != sorted || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("base polygon is not in convex position");

  std::vector<RVec> lifted;
  for (const auto& v : base) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 2)); ++mask) {
      RVec x = v;
      for (std::size_t k = 0; k < n - 2; ++k) x.push_back(Rational(static_cast<long>((mask >> k) & 1)));
      lifted.push_back(std::move(x));
    }
  }
  for (std::size_t j = 0; j < poly.rows.size(); ++j) {
    RVec v = facet_exterior_point(poly, corners, j);
    for (std::size_t k = 0; k < n - 2; ++k) v.push_back(Rational(Integer(1), Integer(2)));
    lifted.push_back(std::move(v));
  }

  InstanceBundle b;
  b.name = "lifted-" + std::to_string(base.size()) + "-" + std::to_string(n);
  b.ctx = EmbeddingContext(n);
  b.system = convex_hull(lifted, n);
  b.hull_target = Polyhedron(n);
  for (const auto& f : poly.rows) {
    RVec a = f.normal;
    a.resize(n, Rational(0));
    b.hull_target.add(Halfspace{a, f.rhs});
  }
  for (std::size_t k = 2; k < n; ++k) {
    b.hull_target.add(Halfspace{unit_vector(n, k), Rational(1)});
    b.hull_target.add(Halfspace{-unit_vector(n, k), Rational(0)});
  }
  Disjunction d = Disjunction::variable(n, 2, Rational(0));
  Goal hull = HullGoal{b.hull_target};
  b.add("hull", detail::make_tree(b.system, hull, detail::branch_chain(b.system, {d}, hull)));
  for (std::size_t i = 0; i < b.hull_target.rows.size(); ++i) {
    Goal g = ValidityGoal{b.hull_target.rows[i]};
    Polyhedron p = b.system;
    BCNode root = extract_dominance(p, b.hull_target.rows[i]).cert ? leaf(leaf_evidence(p, g))
                                                                    : detail::branch_chain(p, {d}, g);
    b.add("facet-" + std::to_string(i), detail::make_tree(b.system, g, std::move(root)));
  }
  return b;
}

/// Members conv({0,1}^n minus v), one per vertex v of the cube, in lexicographic order of v.
inline std::vector<Polyhedron> gen_critical_family(std::size_t n) {
  if (n < 1 || n > 4) throw Error("critical family dimension out of range");
  std::vector<RVec> cube;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long>((mask >> (n - 1 - i)) & 1));
    cube.push_back(v);
  }
  std::vector<Polyhedron> out;
  for (std::size_t k = 0; k < cube.size(); ++k) {
    std::vector<RVec> rest;
    for (std::size_t j = 0; j < cube.size(); ++j)
      if (j != k) rest.push_back(cube[j]);
    out.push_back(convex_hull(rest, n));
  }
  return out;
}

/// All members' rows stacked into one system.
inline Polyhedron stack(const std::vector<Polyhedron>& members) {
  if (members.empty()) throw Error("empty family");
  Polyhedron p(members[0].dim);
  for (const auto& m : members)
    for (const auto& h : m.rows) p.add(h);
  return p;
}

/// Bundle for the critical family: the stacked system, an infeasibility tree, and the same tree proving x_1 <= 0.
inline InstanceBundle gen_critical_bundle(std::size_t n) {
  InstanceBundle b;
  b.name = "critical-" + std::to_string(n);
  b.ctx = EmbeddingContext(n);
  b.system = stack(gen_critical_family(n));
  b.hull_target = Polyhedron(n, {Halfspace{zeros(n), Rational(-1)}});
  b.add("infeasibility", detail::make_tree(b.system, InfeasibilityGoal{}, branch_until_empty(b.system)));
  b.add("validity", detail::make_tree(b.system, ValidityGoal{Halfspace{unit_vector(n, 0), Rational(0)}},
                                      branch_until_empty(b.system)));
  return b;
}

/// Lower bound t / (h' - 1) on the size of an infeasibility tree for a critical family of size t.
inline Rational helly_bound(std::size_t t, std::size_t h_prime) {
  if (h_prime < 2) throw Error("Helly number must be at least 2");
  return Rational(Integer(static_cast<unsigned long>(t)), Integer(static_cast<unsigned long>(h_prime - 1)));
}

/// Helly number of Z^{n1} x R^{n2}: 2^{n1} (n2 + 1).
inline Integer helly_number_mixed(std::size_t n1, std::size_t n2) {
  Integer p = 1;
  for (std::size_t i = 0; i < n1; ++i) p *= 2;
  return p * Integer(static_cast<unsigned long>(n2 + 1));
}

}  // namespace hellycert

#endif  // HELLYCERT_INSTANCES_HPP
