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

#ifndef HELLYCERT_SPLITCOVER_HPP
#define HELLYCERT_SPLITCOVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "hellycert/geometry.hpp"
#include "hellycert/lp.hpp"
#include "hellycert/parallel.hpp"

namespace hellycert {

/// The open slab {beta < alpha.x < beta+1}; a split set when beta is an integer.
struct GSplit {
  RVec alpha;
  Rational beta;

  static GSplit make(RVec alpha, Rational beta) {
    if (is_zero(alpha)) throw Error("split normal is zero");
    if (!is_integral(alpha)) throw Error("split normal is not integral");
    if (primitive_scale(alpha) != Rational(1)) throw Error("split normal is not coprime");
    return GSplit{std::move(alpha), std::move(beta)};
  }

  bool is_split() const { return beta.is_integer(); }
  Halfspace lower() const { return Halfspace{alpha, beta}; }
  Halfspace upper() const { return Halfspace{-alpha, -(beta + 1)}; }
  bool contains(const RVec& x) const {
    Rational v = dot(alpha, x);
    return beta < v && v < beta + 1;
  }
  bool closure_contains(const RVec& x) const {
    Rational v = dot(alpha, x);
    return beta <= v && v <= beta + 1;
  }
  friend bool operator==(const GSplit&, const GSplit&) = default;
};

/**
 * outer \ inner. Rows of outer listed in open_rows are strict. An inner with
 * no rows is all of R^n; use the row 0.x <= -1 for an empty inner.
 */
struct Region {
  Polyhedron outer;
  Polyhedron inner;
  std::vector<std::size_t> open_rows;

  bool contains(const RVec& x) const {
    for (std::size_t i = 0; i < outer.rows.size(); ++i) {
      const Halfspace& h = outer.rows[i];
      bool strict = std::find(open_rows.begin(), open_rows.end(), i) != open_rows.end();
      Rational v = dot(h.normal, x);
      if (strict ? v >= h.rhs : v > h.rhs) return false;
    }
    return !inner.contains(x);
  }
};

enum class CoverMode {
  open_splits,    // region inside the union of the open slabs
  closed_splits,  // region inside the union of their closures
};

struct CoverResult {
  bool covered = false;
  std::optional<RVec> witness;
};

namespace detail {

// A point meeting `closed` and, strictly, `strict`; nullopt when none exists.
inline std::optional<RVec> strict_point(std::size_t n, const std::vector<Halfspace>& closed,
                                        const std::vector<Halfspace>& strict) {
  Polyhedron lp(n + 1);
  for (const auto& h : closed) {
    RVec a = h.normal;
    a.push_back(0);
    lp.add(Halfspace{a, h.rhs});
  }
  for (const auto& h : strict) {
    RVec a = h.normal;
    a.push_back(1);
    lp.add(Halfspace{a, h.rhs});
  }
  lp.add(Halfspace{unit_vector(n + 1, n), Rational(1)});
  LPResult r = lp_solve(lp, unit_vector(n + 1, n), Direction::max);
  if (r.status != LPStatus::optimal || r.value->sign() <= 0) return std::nullopt;
  RVec x = *r.primal;
  x.pop_back();
  return x;
}

class CoverSearch {
 public:
  CoverSearch(const Region& region, const std::vector<GSplit>& splits, CoverMode mode)
      : region_(region), splits_(splits), mode_(mode), n_(region.outer.dim) {
    for (std::size_t i = 0; i < region.outer.rows.size(); ++i) {
      bool strict = std::find(region.open_rows.begin(), region.open_rows.end(), i) != region.open_rows.end();
      (strict ? strict_ : closed_).push_back(region.outer.rows[i]);
    }
  }

  CoverResult run() {
    auto w = dfs(0);
    if (w) return CoverResult{false, w};
    return CoverResult{true, std::nullopt};
  }

 private:
  bool in_split(std::size_t k, const RVec& x) const {
    return mode_ == CoverMode::open_splits ? splits_[k].contains(x) : splits_[k].closure_contains(x);
  }

  // A point of the current selection that lies outside inner.
  std::optional<RVec> escape() const {
    for (const auto& r : region_.inner.rows) {
      std::vector<Halfspace> strict = strict_;
      strict.push_back(Halfspace{-r.normal, -r.rhs});
      if (auto x = strict_point(n_, closed_, strict)) return x;
    }
    return std::nullopt;
  }

  std::optional<RVec> dfs(std::size_t k) {
    auto x = escape();
    if (!x) return std::nullopt;
    bool free = true;
    for (std::size_t j = k; j < splits_.size() && free; ++j) free = !in_split(j, *x);
    if (free) return x;
    for (const Halfspace& side : {splits_[k].lower(), splits_[k].upper()}) {
      auto& bucket = mode_ == CoverMode::open_splits ? closed_ : strict_;
      bucket.push_back(side);
      auto w = dfs(k + 1);
      bucket.pop_back();
      if (w) return w;
    }
    return std::nullopt;
  }

  const Region& region_;
  const std::vector<GSplit>& splits_;
  CoverMode mode_;
  std::size_t n_;
  std::vector<Halfspace> closed_, strict_;
};

inline std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= m; ++i) {
      cur[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace detail

/**
 * Decides region ⊆ union of the splits exactly. Each split is replaced by one
 * of its two closed sides; the region is covered iff no choice of sides
 * leaves a point of outer outside inner. A rejected cover returns such a point.
 */
inline CoverResult covers(const Region& region, const std::vector<GSplit>& splits,
                          CoverMode mode = CoverMode::open_splits) {
  if (region.inner.dim != region.outer.dim) throw Error("region dimension mismatch");
  for (const auto& s : splits)
    if (s.alpha.size() != region.outer.dim) throw Error("split dimension mismatch");
  vertices(Polyhedron(region.outer.dim, region.outer.rows));  // throws if unbounded
  return detail::CoverSearch(region, splits, mode).run();
}

struct CoverSolution {
  std::size_t size = 0;
  std::vector<std::size_t> chosen;  // indices into the family
};

/// Smallest covering subfamily, by increasing cardinality; nullopt if the whole family fails.
inline std::optional<CoverSolution> min_split_cover(const Region& region, const std::vector<GSplit>& family,
                                                    CoverMode mode = CoverMode::open_splits,
                                                    std::optional<std::size_t> max_size = std::nullopt,
                                                    std::size_t threads = thread_count()) {
  if (!covers(region, family, mode).covered) return std::nullopt;
  std::size_t top = std::min(family.size(), max_size.value_or(family.size()));
  for (std::size_t k = 0; k <= top; ++k) {
    auto combos = detail::combinations(family.size(), k);
    auto hit = parallel_first(
        combos.size(),
        [&](std::size_t i) {
          std::vector<GSplit> pick;
          for (auto j : combos[i]) pick.push_back(family[j]);
          return covers(region, pick, mode).covered;
        },
        threads);
    if (hit) return CoverSolution{k, combos[*hit]};
  }
  return std::nullopt;
}

/// Hull lower bound from a split cover number ell.
inline std::size_t hull_lb_from_cover(std::size_t ell) { return 2 * ell + 1; }

/**
 * Splits with coprime alpha, first nonzero entry positive, |alpha_i| <= alpha_max,
 * and beta running from beta_min to beta_max in steps of 1/beta_den.
 */
inline std::vector<GSplit> split_family(std::size_t n, long alpha_max, const Rational& beta_min,
                                        const Rational& beta_max, long beta_den = 1) {
  std::vector<GSplit> out;
  std::vector<long> a(n, -alpha_max);
  std::vector<Rational> betas;
  for (Rational b = beta_min; b <= beta_max; b += Rational(Integer(1), Integer(beta_den))) betas.push_back(b);
  while (true) {
    RVec alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = a[i];
    std::size_t first = 0;
    while (first < n && a[first] == 0) ++first;
    if (first < n && a[first] > 0 && primitive_scale(alpha) == Rational(1))
      for (const auto& b : betas) out.push_back(GSplit{alpha, b});
    std::size_t k = n;
    bool advanced = false;
    while (k-- > 0) {
      if (a[k] < alpha_max) {
        ++a[k];
        for (std::size_t j = k + 1; j < n; ++j) a[j] = -alpha_max;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

/// Axis splits {b < x_i < b+1} for integer b in [beta_min, beta_max].
inline std::vector<GSplit> axis_split_family(std::size_t n, long beta_min, long beta_max) {
  std::vector<GSplit> out;
  for (std::size_t i = 0; i < n; ++i)
    for (long b = beta_min; b <= beta_max; ++b) out.push_back(GSplit{unit_vector(n, i), Rational(b)});
  return out;
}

}  // namespace hellycert

#endif  // HELLYCERT_SPLITCOVER_HPP
