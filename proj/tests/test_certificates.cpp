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

#include <gtest/gtest.h>

#include <random>

#include "hellycert/certificates.hpp"
#include "hellycert/lp.hpp"
#include "oracles.hpp"

using namespace hellycert;
using oracle::q;
using oracle::vec;

namespace {

Polyhedron contradiction() { return Polyhedron(1, {geq(vec({1}), q(1)), Halfspace{vec({1}), q(0)}}); }

Multipliers random_multipliers(std::mt19937& rng, std::size_t rows) {
  std::uniform_int_distribution<int> num(0, 6), den(1, 4), coin(0, 2);
  Multipliers u;
  for (std::size_t i = 0; i < rows; ++i) {
    if (coin(rng) == 0) continue;
    Rational v = q(num(rng) + 1, den(rng));
    u.push_back({i, v});
  }
  return u;
}

std::size_t work_envelope(std::size_t dim, std::size_t support) { return (dim + 1) * support + 1; }

}  // namespace

TEST(CheckFarkas, Examples) {
  Verdict ok = check_farkas(contradiction(), FarkasCert{{{0, q(1)}, {1, q(1)}}});
  EXPECT_TRUE(ok.accepted);
  EXPECT_LE(ok.work, work_envelope(1, 2));

  Verdict partial = check_farkas(contradiction(), FarkasCert{{{0, q(1)}}});
  EXPECT_FALSE(partial.accepted);
  EXPECT_EQ(partial.reason, "normal sum nonzero");
}

TEST(CheckFarkas, MalformedMultipliersRejectedNotThrown) {
  Polyhedron p = contradiction();
  EXPECT_FALSE(check_farkas(p, FarkasCert{{{0, q(1)}, {5, q(1)}}}).accepted);
  EXPECT_FALSE(check_farkas(p, FarkasCert{{{0, q(1)}, {0, q(1)}}}).accepted);
  EXPECT_FALSE(check_farkas(p, FarkasCert{{{0, q(1)}, {1, q(-1)}}}).accepted);
  EXPECT_FALSE(check_farkas(p, FarkasCert{{{0, q(1)}, {1, q(0)}}}).accepted);
  // Exact-zero combination is not a proof of emptiness.
  Polyhedron flat(1, {Halfspace{vec({1}), q(0)}, geq(vec({1}), q(0))});
  Verdict z = check_farkas(flat, FarkasCert{{{0, q(1)}, {1, q(1)}}});
  EXPECT_FALSE(z.accepted);
  EXPECT_FALSE(z.reason.empty());
}

TEST(CheckFarkas, NonemptySquareRejectsRandomMultipliers) {
  std::mt19937 rng(1);
  Polyhedron sq = box(2, q(0), q(1));
  for (int it = 0; it < 2000; ++it) {
    Verdict v = check_farkas(sq, FarkasCert{random_multipliers(rng, sq.rows.size())});
    ASSERT_FALSE(v.accepted);
    ASSERT_FALSE(v.reason.empty());
  }
}

TEST(CheckLowerBound, Examples) {
  Polyhedron half(1, {geq(vec({1}), q(1))});
  EXPECT_TRUE(check_lower_bound(half, BoundCert{vec({1}), q(1), {{0, q(1)}}}).accepted);
  EXPECT_FALSE(check_lower_bound(half, BoundCert{vec({1}), q(2), {{0, q(1)}}}).accepted);
  Polyhedron orthant(2, {geq(vec({1, 0}), q(0)), geq(vec({0, 1}), q(0))});
  EXPECT_TRUE(
      check_lower_bound(orthant, BoundCert{vec({1, 1}), q(0), {{0, q(1)}, {1, q(1)}}}).accepted);
  EXPECT_FALSE(check_lower_bound(orthant, BoundCert{vec({1}), q(0), {}}).accepted);
}

TEST(CheckDominance, Examples) {
  Polyhedron sq = box(2, q(0), q(1));
  Multipliers u = {{0, q(1)}, {2, q(1)}};
  EXPECT_TRUE(check_dominance(sq, DominanceCert{Halfspace{vec({1, 1}), q(2)}, u}).accepted);
  Verdict tight = check_dominance(sq, DominanceCert{Halfspace{vec({1, 1}), q(3, 2)}, u});
  EXPECT_FALSE(tight.accepted);
  Polyhedron seg = box(1, q(0), q(3));
  EXPECT_TRUE(check_dominance(seg, DominanceCert{Halfspace{vec({1}), q(3)}, {{0, q(1)}}}).accepted);
}

TEST(Soundness, FarkasAcceptanceImpliesEmpty) {
  std::mt19937 rng(21);
  std::size_t accepted = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int it = 0; it < 80; ++it) {
      Polyhedron p = oracle::random_polytope(rng, n, 2 + it % 6);
      bool empty = oracle::basis_vertices(p).empty();
      // Random multipliers and the LP-extracted ones.
      for (int k = 0; k < 20; ++k) {
        FarkasCert c{random_multipliers(rng, p.rows.size())};
        Verdict v = check_farkas(p, c);
        ASSERT_LE(v.work, work_envelope(n, c.support()));
        if (v.accepted) {
          ASSERT_TRUE(empty);
        }
      }
      if (auto out = extract_farkas(p); out.cert) {
        Verdict v = check_farkas(p, *out.cert);
        ASSERT_TRUE(v.accepted) << v.reason;
        ASSERT_TRUE(empty);
        ASSERT_LE(v.work, work_envelope(n, out.cert->support()));
        ++accepted;
      }
    }
  }
  EXPECT_GT(accepted, 5u);
}

TEST(Soundness, DominanceAcceptanceImpliesValid) {
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> c(-3, 3), slack(0, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int it = 0; it < 60; ++it) {
      Polyhedron p = oracle::random_polytope(rng, n, it % 4);
      if (oracle::basis_vertices(p).empty()) continue;
      RVec a(n);
      for (auto& x : a) x = c(rng);
      LPResult r = lp_solve(p, a, Direction::max);
      ASSERT_EQ(r.status, LPStatus::optimal);
      Rational b = *r.value + q(slack(rng), 2) - q(1, 2);
      auto out = extract_dominance(p, a, b);
      if (out.cert) {
        Verdict v = check_dominance(p, *out.cert);
        ASSERT_TRUE(v.accepted) << v.reason;
        ASSERT_LE(*r.value, b);
      } else {
        ASSERT_GT(*r.value, b);
      }
      for (int k = 0; k < 10; ++k) {
        DominanceCert dc{Halfspace{a, b}, random_multipliers(rng, p.rows.size())};
        if (check_dominance(p, dc).accepted) {
          ASSERT_LE(*r.value, b);
        }
      }
    }
  }
}

TEST(TamperResistance, PerturbedMultipliers) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 7);
  int flipped = 0;
  for (int it = 0; it < 300; ++it) {
    Polyhedron p = oracle::random_polytope(rng, 1 + it % 3, 3 + it % 5);
    auto out = extract_farkas(p);
    if (!out.cert) continue;
    FarkasCert c = *out.cert;
    std::uniform_int_distribution<std::size_t> pick(0, c.multipliers.size() - 1);
    Rational delta = q(num(rng), den(rng));
    if (delta.is_zero()) delta = q(1, 3);
    c.multipliers[pick(rng)].value += delta;
    Verdict v = check_farkas(p, c);
    // Accepted only when the identities really hold: recompute by hand.
    RVec a = zeros(p.dim);
    Rational b = 0;
    bool nonneg = true;
    for (const auto& m : c.multipliers) {
      nonneg = nonneg && m.value.sign() > 0;
      for (std::size_t j = 0; j < p.dim; ++j) a[j] += m.value * p.rows[m.row].normal[j];
      b += m.value * p.rows[m.row].rhs;
    }
    ASSERT_EQ(v.accepted, nonneg && is_zero(a) && b < q(0));
    if (!v.accepted) ++flipped;
  }
  EXPECT_GT(flipped, 10);
}

TEST(Checkers, Deterministic) {
  Polyhedron p = contradiction();
  FarkasCert c{{{0, q(2)}, {1, q(2)}}};
  Verdict a = check_farkas(p, c), b = check_farkas(p, c);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.work, b.work);
  EXPECT_EQ(a.reason, b.reason);
}
