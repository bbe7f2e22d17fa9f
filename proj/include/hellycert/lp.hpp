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

#ifndef HELLYCERT_LP_HPP
#define HELLYCERT_LP_HPP

#include <optional>
#include <vector>

#include "hellycert/certificates.hpp"
#include "hellycert/geometry.hpp"

namespace hellycert {

enum class LPStatus { optimal, infeasible, unbounded };
enum class Direction { min, max };

/**
 * Result of an exact LP solve over {x : a_i.x <= b_i}.
 *
 * optimal:    primal, value and dual are set. The dual u >= 0 satisfies
 *             sum u_i a_i = c and sum u_i b_i = value when maximizing, and
 *             sum u_i a_i = -c, -sum u_i b_i = value when minimizing.
 * infeasible: ray is a Farkas certificate (sum u_i a_i = 0, sum u_i b_i < 0).
 * unbounded:  primal is a feasible point and direction an improving ray.
 */
struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::optional<RVec> primal;
  std::optional<Rational> value;
  std::optional<Multipliers> dual;
  std::optional<Multipliers> ray;
  std::optional<RVec> direction;
};

namespace detail {

// Dense two-phase tableau simplex with Bland's rule. Free variables are split
// as x = xp - xm; rows are a_i.x + s_i = b_i, sign-flipped when b_i < 0 and
// then started on an artificial column.
class Tableau {
 public:
  Tableau(const Polyhedron& p) : n_(p.dim), m_(p.rows.size()) {
    std::size_t art = 0;
    for (const auto& h : p.rows)
      if (h.rhs.sign() < 0) ++art;
    cols_ = 2 * n_ + m_ + art;
    t_.assign(m_, RVec(cols_ + 1, Rational(0)));
    basis_.resize(m_);
    is_art_.assign(cols_, false);
    std::size_t next_art = 2 * n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const Halfspace& h = p.rows[i];
      int sigma = h.rhs.sign() < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) {
        t_[i][j] = sigma * h.normal[j];
        t_[i][n_ + j] = -(sigma * h.normal[j]);
      }
      t_[i][2 * n_ + i] = sigma;
      t_[i][cols_] = sigma * h.rhs;
      if (sigma < 0) {
        t_[i][next_art] = 1;
        is_art_[next_art] = true;
        basis_[i] = next_art++;
      } else {
        basis_[i] = 2 * n_ + i;
      }
    }
  }

  // Returns false when the rows are infeasible.
  bool phase_one() {
    RVec cost(cols_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j)
      if (is_art_[j]) cost[j] = 1;
    set_cost(cost);
    run(false);
    if (obj_[cols_].sign() != 0) return false;  // obj_[cols_] = -(sum of artificials)
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_art_[basis_[i]]) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_art_[j] && !t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Minimizes d.x; returns the entering column when unbounded.
  std::optional<std::size_t> phase_two(const RVec& d) {
    RVec cost(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = d[j];
      cost[n_ + j] = -d[j];
    }
    set_cost(cost);
    return run(true);
  }

  RVec primal() const {
    RVec x = zeros(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t b = basis_[i];
      if (b < n_) x[b] += t_[i][cols_];
      else if (b < 2 * n_) x[b - n_] -= t_[i][cols_];
    }
    return x;
  }

  RVec direction(std::size_t entering) const {
    RVec d = zeros(n_);
    auto bump = [&](std::size_t col, const Rational& amount) {
      if (col < n_) d[col] += amount;
      else if (col < 2 * n_) d[col - n_] -= amount;
    };
    bump(entering, Rational(1));
    for (std::size_t i = 0; i < m_; ++i) bump(basis_[i], -t_[i][entering]);
    return d;
  }

  // Row multipliers read off the reduced costs of the slack columns.
  Multipliers row_multipliers() const {
    Multipliers u;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& r = obj_[2 * n_ + i];
      if (!r.is_zero()) u.push_back(Multiplier{i, r});
    }
    return u;
  }

  Rational objective_value() const { return -obj_[cols_]; }

 private:
  void set_cost(const RVec& cost) {
    obj_ = cost;
    obj_.push_back(Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    if (!obj_[c].is_zero()) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::optional<std::size_t> run(bool forbid_artificial) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (forbid_artificial && is_art_[j]) continue;
        if (obj_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][*enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  std::size_t n_, m_, cols_ = 0;
  std::vector<RVec> t_;
  RVec obj_;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_art_;
};

}  // namespace detail

/// Exact simplex over p; deterministic (Bland's rule, lowest-index ties).
inline LPResult lp_solve(const Polyhedron& p, const RVec& objective, Direction dir) {
  if (objective.size() != p.dim) throw Error("objective dimension does not match polyhedron");
  LPResult res;
  detail::Tableau tab(p);
  if (!tab.phase_one()) {
    res.status = LPStatus::infeasible;
    res.ray = tab.row_multipliers();
    return res;
  }
  RVec d = dir == Direction::min ? objective : -objective;
  if (auto enter = tab.phase_two(d)) {
    res.status = LPStatus::unbounded;
    res.primal = tab.primal();
    res.direction = tab.direction(*enter);
    return res;
  }
  res.status = LPStatus::optimal;
  res.primal = tab.primal();
  res.value = dot(objective, *res.primal);
  res.dual = tab.row_multipliers();
  return res;
}

/// Either an infeasibility certificate or a feasible witness point.
struct FarkasOutcome {
  std::optional<FarkasCert> cert;
  std::optional<RVec> witness;
};

inline FarkasOutcome extract_farkas(const Polyhedron& p) {
  LPResult r = lp_solve(p, zeros(p.dim), Direction::max);
  if (r.status == LPStatus::infeasible) return FarkasOutcome{FarkasCert{*r.ray}, std::nullopt};
  return FarkasOutcome{std::nullopt, r.primal};
}

inline bool is_empty(const Polyhedron& p) { return extract_farkas(p).cert.has_value(); }

/// Either a dominance certificate for a.x <= b or a point of p violating it.
struct DominanceOutcome {
  std::optional<DominanceCert> cert;
  std::optional<RVec> violating_point;
};

inline DominanceOutcome extract_dominance(const Polyhedron& p, const RVec& a, const Rational& b) {
  if (a.size() != p.dim) throw Error("target dimension does not match polyhedron");
  LPResult r = lp_solve(p, a, Direction::max);
  if (r.status == LPStatus::infeasible)
    throw Error("dominance over empty set is vacuous; use extract_farkas");
  if (r.status == LPStatus::unbounded) {
    // Step far enough along the improving ray to pass b.
    RVec x = *r.primal;
    Rational rate = dot(a, *r.direction);
    Rational t = (b - dot(a, x)) / rate + 1;
    if (t.sign() < 0) t = 1;
    return DominanceOutcome{std::nullopt, x + t * *r.direction};
  }
  if (*r.value > b) return DominanceOutcome{std::nullopt, r.primal};
  return DominanceOutcome{DominanceCert{Halfspace{a, b}, *r.dual}, std::nullopt};
}

inline DominanceOutcome extract_dominance(const Polyhedron& p, const Halfspace& h) {
  return extract_dominance(p, h.normal, h.rhs);
}

}  // namespace hellycert

#endif  // HELLYCERT_LP_HPP
