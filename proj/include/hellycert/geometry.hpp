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

#ifndef HELLYCERT_GEOMETRY_HPP
#define HELLYCERT_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hellycert/rational.hpp"

namespace hellycert {

/// Closed halfspace {x : normal . x <= rhs}.
struct Halfspace {
  RVec normal;
  Rational rhs;

  std::size_t dim() const { return normal.size(); }
  /// 0.x <= b: either all of R^n (b >= 0) or empty (b < 0).
  bool is_trivial() const { return is_zero(normal); }
  bool contains(const RVec& x) const { return dot(normal, x) <= rhs; }
  Rational slack(const RVec& x) const { return rhs - dot(normal, x); }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// Halfspace a.x >= b stored in <= orientation.
inline Halfspace geq(RVec a, const Rational& b) { return Halfspace{-std::move(a), -b}; }

inline std::string to_string(const Halfspace& h) {
  return to_string(h.normal) + ".x <= " + h.rhs.str();
}

/// Finite intersection of halfspaces; row order indexes certificate multipliers.
struct Polyhedron {
  std::size_t dim = 0;
  std::vector<Halfspace> rows;

  Polyhedron() = default;
  explicit Polyhedron(std::size_t n) : dim(n) {}
  Polyhedron(std::size_t n, std::vector<Halfspace> r) : dim(n), rows(std::move(r)) {
    for (const auto& h : rows)
      if (h.dim() != dim) throw Error("row dimension does not match polyhedron dimension");
  }

  void add(Halfspace h) {
    if (h.dim() != dim) throw Error("row dimension does not match polyhedron dimension");
    rows.push_back(std::move(h));
  }

  bool contains(const RVec& x) const {
    return std::all_of(rows.begin(), rows.end(), [&](const Halfspace& h) { return h.contains(x); });
  }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

inline Polyhedron intersect(Polyhedron p, const std::vector<Halfspace>& extra) {
  for (const auto& h : extra) p.add(h);
  return p;
}

/// Axis-parallel box prod [lo_i, hi_i]; rows ordered x_i <= hi_i, -x_i <= -lo_i.
inline Polyhedron box(const RVec& lo, const RVec& hi) {
  if (lo.size() != hi.size()) throw Error("dimension mismatch");
  Polyhedron p(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    p.add(Halfspace{unit_vector(lo.size(), i), hi[i]});
    p.add(Halfspace{-unit_vector(lo.size(), i), -lo[i]});
  }
  return p;
}

inline Polyhedron box(std::size_t n, const Rational& lo, const Rational& hi) {
  return box(RVec(n, lo), RVec(n, hi));
}

/// Fixes the embedded pair Z^n inside R^n.
struct EmbeddingContext {
  std::size_t dim = 1;

  EmbeddingContext() = default;
  explicit EmbeddingContext(std::size_t n) : dim(n) {
    if (n < 1) throw Error("embedding dimension must be at least 1");
  }
  friend bool operator==(const EmbeddingContext&, const EmbeddingContext&) = default;
};

/**
 * Coprime-integer normalization used for rounding: scale by the positive
 * factor that clears denominators and removes the gcd. Orientation is kept.
 */
inline Halfspace normalize_integral(const Halfspace& h) {
  if (h.is_trivial()) throw Error("trivial halfspace has no integral normalization");
  Rational s = primitive_scale(h.normal);
  return Halfspace{s * h.normal, s * h.rhs};
}

/// {a.x >= floor(b)+1} for the normalized (a, b): every lattice point violating h lies in it.
inline Halfspace tighten_complement(const Halfspace& h, const EmbeddingContext& ctx) {
  if (h.dim() != ctx.dim) throw Error("dimension mismatch");
  if (h.is_trivial()) throw Error("trivial halfspace has no tightened complement");
  Halfspace n = normalize_integral(h);
  return Halfspace{-n.normal, Rational(Integer(-(n.rhs.floor() + 1)))};
}

// ---------------------------------------------------------------------------
// Exact linear algebra

using Matrix = std::vector<RVec>;

struct RowEchelon {
  Matrix rows;  // nonzero rows in reduced row echelon form
  std::vector<std::size_t> pivots;
};

inline RowEchelon rref(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::vector<RVec> nullspace(const Matrix& m, std::size_t cols) {
  RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves the square system m x = rhs; nullopt when m is singular.
inline std::optional<RVec> solve_square(const Matrix& m, const RVec& rhs) {
  std::size_t n = rhs.size();
  Matrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RVec row = m[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon e = rref(std::move(aug), n);
  if (e.pivots.size() < n) return std::nullopt;
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

inline RVec primitive(const RVec& v) { return primitive_scale(v) * v; }

// ---------------------------------------------------------------------------
// Double description

/// Generators of {y : c.y <= 0 for every constraint c}.
struct ConeGenerators {
  std::vector<RVec> rays;        // extreme rays of the pointed part, primitive integer
  std::vector<RVec> lineality;   // basis of the lineality space
};

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= b.w_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  RVec z;
  Bits zero;
};

// Extreme rays of {z : m z <= 0} for m of full column rank r.
inline std::vector<RVec> pointed_cone_rays(const Matrix& m, std::size_t r) {
  std::vector<std::size_t> basis_rows;
  {
    Matrix acc;
    for (std::size_t i = 0; i < m.size() && basis_rows.size() < r; ++i) {
      Matrix trial = acc;
      trial.push_back(m[i]);
      if (rref(trial, r).pivots.size() == trial.size()) {
        acc = std::move(trial);
        basis_rows.push_back(i);
      }
    }
  }
  if (basis_rows.size() != r) throw Error("internal: cone matrix lacks full column rank");

  Matrix sq;
  for (auto i : basis_rows) sq.push_back(m[i]);
  std::vector<bool> processed(m.size(), false);
  for (auto i : basis_rows) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < r; ++j) {
    RVec rhs = zeros(r);
    rhs[j] = -1;
    auto z = solve_square(sq, rhs);
    Ray ray{primitive(*z), Bits(m.size())};
    for (std::size_t k = 0; k < r; ++k)
      if (k != j) ray.zero.set(basis_rows[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m.size(); ++i) {
    if (processed[i]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(m[i], rays[k].z);
      if (val[k].sign() > 0) pos.push_back(k);
      else if (val[k].sign() < 0) neg.push_back(k);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k].sign() > 0) continue;
      Ray keep = rays[k];
      if (val[k].is_zero()) keep.zero.set(i);
      next.push_back(std::move(keep));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (r >= 2 && common.count() + 2 < r) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q == p || q == n) continue;
          if (common.subset_of(rays[q].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        RVec z = val[p] * rays[n].z - val[n] * rays[p].z;
        Ray fresh{primitive(z), common};
        fresh.zero.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<RVec> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.z));
  return out;
}

}  // namespace detail

/**
 * Double-description computation of the generators of the polyhedral cone
 * {y in R^dim : c.y <= 0 for all c in constraints}. The lineality space is
 * split off first so the incremental ray update runs on a pointed cone.
 */
inline ConeGenerators cone_generators(const Matrix& constraints, std::size_t dim) {
  ConeGenerators g;
  g.lineality = nullspace(constraints, dim);
  RowEchelon e = rref(constraints, dim);
  std::size_t r = e.rows.size();
  if (r == 0) return g;

  Matrix reduced;
  reduced.reserve(constraints.size());
  for (const auto& c : constraints) {
    RVec row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = dot(c, e.rows[k]);
    reduced.push_back(std::move(row));
  }
  for (const auto& z : detail::pointed_cone_rays(reduced, r)) {
    RVec y = zeros(dim);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < dim; ++j) y[j] += z[k] * e.rows[k][j];
    g.rays.push_back(primitive(y));
  }
  std::sort(g.rays.begin(), g.rays.end());
  g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
  return g;
}

/// All vertices of a bounded polyhedron, sorted lexicographically; [] when empty.
inline std::vector<RVec> vertices(const Polyhedron& p) {
  const std::size_t n = p.dim;
  Matrix cone;
  cone.reserve(p.rows.size() + 1);
  for (const auto& h : p.rows) {
    RVec row = h.normal;
    row.push_back(-h.rhs);
    cone.push_back(std::move(row));
  }
  RVec t_nonneg = zeros(n + 1);
  t_nonneg[n] = -1;
  cone.push_back(std::move(t_nonneg));

  ConeGenerators g = cone_generators(cone, n + 1);
  std::vector<RVec> verts;
  bool recession = !g.lineality.empty();
  for (const auto& y : g.rays) {
    if (y[n].is_zero()) {
      recession = true;
      continue;
    }
    RVec v(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    Rational inv = Rational(1) / y[n];
    for (auto& x : v) x *= inv;
    verts.push_back(std::move(v));
  }
  if (verts.empty()) return {};
  if (recession) throw Error("unbounded polyhedron");
  std::sort(verts.begin(), verts.end());
  return verts;
}

/**
 * Inequality description of conv(points) in R^dim. Facet rows come out as
 * primitive integer (a, b) pairs; if the hull is not full-dimensional its
 * affine hull is appended as pairs of opposite rows. An empty point set
 * yields the infeasible row 0.x <= -1.
 */
inline Polyhedron convex_hull(const std::vector<RVec>& points, std::size_t dim) {
  Polyhedron out(dim);
  if (points.empty()) {
    out.add(Halfspace{zeros(dim), Rational(-1)});
    return out;
  }
  Matrix cone;
  for (const auto& v : points) {
    if (v.size() != dim) throw Error("dimension mismatch");
    RVec row = v;
    row.push_back(-1);
    cone.push_back(std::move(row));
  }
  ConeGenerators g = cone_generators(cone, dim + 1);
  auto split = [dim](const RVec& y) {
    return Halfspace{RVec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim)), y[dim]};
  };
  for (const auto& y : g.rays) {
    Halfspace h = split(y);
    if (h.is_trivial()) continue;
    out.add(std::move(h));
  }
  for (const auto& y : g.lineality) {
    RVec p = primitive(y);
    Halfspace h = split(p);
    if (h.is_trivial()) continue;
    out.add(h);
    out.add(Halfspace{-h.normal, -h.rhs});
  }
  return out;
}

/// Integer bounding box [lo, hi] of a bounded polyhedron; nullopt when empty.
inline std::optional<std::pair<std::vector<Integer>, std::vector<Integer>>> integer_bounds(
    const Polyhedron& p) {
  auto verts = vertices(p);
  if (verts.empty()) return std::nullopt;
  std::vector<Integer> lo(p.dim), hi(p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) {
    Rational mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = mn.ceil();
    hi[i] = mx.floor();
  }
  return std::make_pair(std::move(lo), std::move(hi));
}

/// Exhaustive enumeration of Z^n inside a bounded polyhedron, lexicographic order.
inline std::vector<RVec> lattice_points(const Polyhedron& p) {
  auto bounds = integer_bounds(p);
  if (!bounds) return {};
  const auto& [lo, hi] = *bounds;
  for (std::size_t i = 0; i < p.dim; ++i)
    if (lo[i] > hi[i]) return {};
  std::vector<RVec> out;
  std::vector<Integer> cur = lo;
  while (true) {
    RVec z(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) z[i] = Rational(cur[i]);
    if (p.contains(z)) out.push_back(std::move(z));
    bool advanced = false;
    for (std::size_t k = p.dim; k-- > 0;) {
      if (cur[k] < hi[k]) {
        ++cur[k];
        for (std::size_t j = k + 1; j < p.dim; ++j) cur[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace hellycert

#endif  // HELLYCERT_GEOMETRY_HPP
