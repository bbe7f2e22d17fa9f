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

// Test-only reference computations. Nothing here calls into the library's
// geometry or LP code paths; they exist to check those paths independently.

#ifndef HELLYCERT_TESTS_ORACLES_HPP
#define HELLYCERT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hellycert/geometry.hpp"

namespace oracle {

using hellycert::Halfspace;
using hellycert::Polyhedron;
using hellycert::Rational;
using hellycert::RVec;

inline Rational q(long p, long d = 1) { return Rational(hellycert::Integer(p), hellycert::Integer(d)); }

inline RVec vec(std::initializer_list<Rational> xs) { return RVec(xs); }

// Plain Gauss-Jordan on an n x n system, written separately from the library's rref.
inline std::optional<RVec> gauss_solve(std::vector<RVec> a, RVec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline void for_each_subset(std::size_t m, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Vertices of a bounded polyhedron by enumerating every n-subset of rows
// whose boundary hyperplanes meet in a single feasible point.
inline std::vector<RVec> basis_vertices(const Polyhedron& p) {
  std::vector<RVec> out;
  for_each_subset(p.rows.size(), p.dim, [&](const std::vector<std::size_t>& s) {
    std::vector<RVec> a;
    RVec b;
    for (auto i : s) {
      a.push_back(p.rows[i].normal);
      b.push_back(p.rows[i].rhs);
    }
    auto x = gauss_solve(a, b);
    if (!x) return;
    for (const auto& h : p.rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < p.dim; ++j) lhs += h.normal[j] * (*x)[j];
      if (lhs > h.rhs) return;
    }
    out.push_back(*x);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Rational eval(const RVec& a, const RVec& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

inline bool satisfies(const Polyhedron& p, const RVec& x) {
  for (const auto& h : p.rows)
    if (eval(h.normal, x) > h.rhs) return false;
  return true;
}

// Max of a linear function over a bounded nonempty polyhedron via its vertex list.
inline Rational max_over(const std::vector<RVec>& verts, const RVec& a) {
  Rational best = eval(a, verts.at(0));
  for (const auto& v : verts) best = std::max(best, eval(a, v));
  return best;
}

// Grid points with step 1/den inside [lo, hi]^n.
inline std::vector<RVec> grid(std::size_t n, long lo, long hi, long den) {
  std::vector<RVec> out;
  std::vector<long> cur(n, lo * den);
  while (true) {
    RVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = q(cur[i], den);
    out.push_back(x);
    std::size_t k = n;
    bool adv = false;
    while (k-- > 0) {
      if (cur[k] < hi * den) {
        ++cur[k];
        for (std::size_t j = k + 1; j < n; ++j) cur[j] = lo * den;
        adv = true;
        break;
      }
    }
    if (!adv) return out;
  }
}

// Random bounded polyhedron: a box plus a few random cuts with small integer data.
inline Polyhedron random_polytope(std::mt19937& rng, std::size_t n, std::size_t extra) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-4, 8), half(0, 1);
  Polyhedron p = hellycert::box(n, q(-2 - half(rng), 1 + half(rng)), q(3 + half(rng)));
  for (std::size_t k = 0; k < extra; ++k) {
    RVec a(n);
    bool nz = false;
    for (auto& x : a) {
      x = coef(rng);
      nz = nz || !x.is_zero();
    }
    if (!nz) a[0] = 1;
    p.add(Halfspace{a, q(rhs(rng), 1 + half(rng))});
  }
  return p;
}

}  // namespace oracle

#endif  // HELLYCERT_TESTS_ORACLES_HPP
