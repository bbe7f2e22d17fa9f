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

#ifndef HELLYCERT_CERTIFICATES_HPP
#define HELLYCERT_CERTIFICATES_HPP

#include <string>
#include <utility>
#include <vector>

#include "hellycert/geometry.hpp"

namespace hellycert {

/// One nonzero entry of a sparse multiplier vector over the rows of a polyhedron.
struct Multiplier {
  std::size_t row = 0;
  Rational value;
  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

using Multipliers = std::vector<Multiplier>;

/// sum u_i a_i = 0 and sum u_i b_i < 0 proves the rows have no common point.
struct FarkasCert {
  Multipliers multipliers;
  std::size_t support() const { return multipliers.size(); }
  friend bool operator==(const FarkasCert&, const FarkasCert&) = default;
};

/// Combines the rows (read as -a_i.x >= -b_i) into objective.x >= bound.
struct BoundCert {
  RVec objective;
  Rational bound;
  Multipliers multipliers;
  friend bool operator==(const BoundCert&, const BoundCert&) = default;
};

/// Combines the rows into an inequality at least as strong as target.
struct DominanceCert {
  Halfspace target;
  Multipliers multipliers;
  friend bool operator==(const DominanceCert&, const DominanceCert&) = default;
};

/// Checker outcome; `work` counts elementary rational multiply-adds.
struct Verdict {
  bool accepted = false;
  std::string reason;
  std::size_t work = 0;

  static Verdict accept(std::size_t work) { return Verdict{true, {}, work}; }
  static Verdict reject(std::string why, std::size_t work) {
    return Verdict{false, std::move(why), work};
  }
  explicit operator bool() const { return accepted; }
};

namespace detail {

struct Combination {
  RVec normal;
  Rational rhs;
  std::size_t work = 0;
  std::string error;
};

// Forms sum u_i (a_i, b_i); reports malformed multiplier lists via `error`.
inline Combination combine(const Polyhedron& p, const Multipliers& mult, bool strictly_positive) {
  Combination c{zeros(p.dim), Rational(0), 0, {}};
  std::vector<bool> seen(p.rows.size(), false);
  for (const auto& m : mult) {
    if (m.row >= p.rows.size()) {
      c.error = "multiplier index " + std::to_string(m.row) + " out of range";
      return c;
    }
    if (seen[m.row]) {
      c.error = "duplicate multiplier index " + std::to_string(m.row);
      return c;
    }
    seen[m.row] = true;
    if (m.value.sign() < 0 || (strictly_positive && m.value.is_zero())) {
      c.error = "multiplier on row " + std::to_string(m.row) +
                (m.value.is_zero() ? " is zero" : " is negative");
      return c;
    }
    const Halfspace& h = p.rows[m.row];
    for (std::size_t j = 0; j < p.dim; ++j) c.normal[j] += m.value * h.normal[j];
    c.rhs += m.value * h.rhs;
    c.work += p.dim + 1;
  }
  return c;
}

}  // namespace detail

/// Accepts iff the multipliers combine the rows of `p` into 0.x <= (negative).
inline Verdict check_farkas(const Polyhedron& p, const FarkasCert& cert) {
  auto c = detail::combine(p, cert.multipliers, true);
  if (!c.error.empty()) return Verdict::reject(c.error, c.work);
  c.work += 1;
  if (!is_zero(c.normal)) return Verdict::reject("normal sum nonzero", c.work);
  if (c.rhs.sign() >= 0)
    return Verdict::reject("right-hand side sum " + c.rhs.str() + " is not negative", c.work);
  return Verdict::accept(c.work);
}

/// Accepts iff the multipliers prove objective.x >= bound over `p`.
inline Verdict check_lower_bound(const Polyhedron& p, const BoundCert& cert) {
  if (cert.objective.size() != p.dim) return Verdict::reject("objective dimension mismatch", 0);
  auto c = detail::combine(p, cert.multipliers, false);
  if (!c.error.empty()) return Verdict::reject(c.error, c.work);
  c.work += 1;
  if (c.normal != -cert.objective)
    return Verdict::reject("combined rows do not reproduce the objective", c.work);
  if (-c.rhs < cert.bound)
    return Verdict::reject("certified bound " + (-c.rhs).str() + " is below " + cert.bound.str(),
                           c.work);
  return Verdict::accept(c.work);
}

/// Accepts iff the multipliers prove target.normal.x <= target.rhs over `p`.
inline Verdict check_dominance(const Polyhedron& p, const DominanceCert& cert) {
  if (cert.target.dim() != p.dim) return Verdict::reject("target dimension mismatch", 0);
  auto c = detail::combine(p, cert.multipliers, false);
  if (!c.error.empty()) return Verdict::reject(c.error, c.work);
  c.work += 1;
  if (c.normal != cert.target.normal)
    return Verdict::reject("combined rows do not reproduce the target normal", c.work);
  if (c.rhs > cert.target.rhs)
    return Verdict::reject("combined right-hand side " + c.rhs.str() + " exceeds " +
                               cert.target.rhs.str(),
                           c.work);
  return Verdict::accept(c.work);
}

}  // namespace hellycert

#endif  // HELLYCERT_CERTIFICATES_HPP
