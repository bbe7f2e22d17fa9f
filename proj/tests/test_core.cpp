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

#include "hellycert/geometry.hpp"
#include "oracles.hpp"

using namespace hellycert;
using oracle::q;
using oracle::vec;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rational_make(2, 4).str(), "1/2");
  EXPECT_EQ(rational_make(-3, -6).str(), "1/2");
  Rational z = rational_make(0, 7);
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
  EXPECT_EQ(z.str(), "0");
  EXPECT_EQ(rational_make(3, -9).str(), "-1/3");
}

TEST(Rational, ZeroDenominator) {
  try {
    rational_make(1, 0);
    FAIL() << "expected error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "zero denominator");
  }
  EXPECT_THROW(Rational::parse("3/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, ParseAndFloor) {
  EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
  EXPECT_EQ(Rational::parse("7"), q(7));
  EXPECT_EQ(q(-3, 2).floor(), -2);
  EXPECT_EQ(q(-3, 2).ceil(), -1);
  EXPECT_EQ(q(7, 2).floor(), 3);
}

TEST(Rational, ArithmeticIsExact) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 99991);
  for (int it = 0; it < 2000; ++it) {
    Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - b) + b, a);
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
    ASSERT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(TightenComplement, Examples) {
  EmbeddingContext one(1), two(2);
  EXPECT_EQ(tighten_complement(Halfspace{vec({1}), q(3)}, one), geq(vec({1}), q(4)));
  EXPECT_EQ(tighten_complement(Halfspace{vec({2, -1}), q(3, 2)}, two), geq(vec({2, -1}), q(2)));
  // 2x <= 3 normalizes to x <= 3/2 before rounding.
  EXPECT_EQ(tighten_complement(Halfspace{vec({2}), q(3)}, one), geq(vec({1}), q(2)));
  // Fractional normal: (1/2, 1/3).x <= 1 becomes (3, 2).x <= 6.
  EXPECT_EQ(tighten_complement(Halfspace{vec({q(1, 2), q(1, 3)}), q(1)}, two),
            geq(vec({3, 2}), q(7)));
}

TEST(TightenComplement, TrivialHalfspaceRejected) {
  try {
    tighten_complement(Halfspace{vec({0, 0}), q(1)}, EmbeddingContext(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "trivial halfspace has no tightened complement");
  }
}

TEST(TightenComplement, KeepsEveryViolatingLatticePoint) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), num(-20, 20), den(1, 6);
  auto pts = oracle::grid(2, -5, 5, 1);
  for (int it = 0; it < 300; ++it) {
    RVec a = {q(coef(rng), den(rng)), q(coef(rng), den(rng))};
    if (is_zero(a)) continue;
    Halfspace h{a, q(num(rng), den(rng))};
    Halfspace t = tighten_complement(h, EmbeddingContext(2));
    for (const auto& z : pts) {
      bool violates = oracle::eval(h.normal, z) > h.rhs;
      ASSERT_EQ(violates, t.contains(z)) << to_string(h) << " at " << to_string(z);
    }
  }
}

TEST(Vertices, UnitSquare) {
  auto v = vertices(box(2, q(0), q(1)));
  std::vector<RVec> expect = {vec({0, 0}), vec({0, 1}), vec({1, 0}), vec({1, 1})};
  EXPECT_EQ(v, expect);
}

TEST(Vertices, EmptyInterval) {
  Polyhedron p(1, {geq(vec({1}), q(1)), Halfspace{vec({1}), q(0)}});
  EXPECT_TRUE(vertices(p).empty());
}

TEST(Vertices, HalfIntegralBoxMatchesOracle) {
  Polyhedron p = box(2, q(-1, 2), q(7, 2));
  auto v = vertices(p);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v, oracle::basis_vertices(p));
  EXPECT_EQ(v.front(), vec({q(-1, 2), q(-1, 2)}));
  EXPECT_EQ(v.back(), vec({q(7, 2), q(7, 2)}));
}

TEST(Vertices, UnboundedRejected) {
  Polyhedron p(2, {geq(vec({1, 0}), q(0)), geq(vec({0, 1}), q(0))});
  try {
    vertices(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "unbounded polyhedron");
  }
  // A line: rank-deficient rows.
  Polyhedron line(2, {Halfspace{vec({1, 0}), q(1)}, geq(vec({1, 0}), q(0))});
  EXPECT_THROW(vertices(line), Error);
  // Empty but unbounded-looking: still reported empty.
  Polyhedron empty(2, {Halfspace{vec({1, 0}), q(0)}, geq(vec({1, 0}), q(1))});
  EXPECT_TRUE(vertices(empty).empty());
}

TEST(Vertices, DegenerateAndLowerDimensional) {
  // Square pyramid apex: four facets through one point (degenerate vertex).
  Polyhedron pyramid(3, {geq(vec({0, 0, 1}), q(0)), Halfspace{vec({1, 0, 1}), q(1)},
                         Halfspace{vec({-1, 0, 1}), q(1)}, Halfspace{vec({0, 1, 1}), q(1)},
                         Halfspace{vec({0, -1, 1}), q(1)}});
  auto v = vertices(pyramid);
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v, oracle::basis_vertices(pyramid));
  // A single point given by a flat box.
  auto pt = vertices(box(vec({q(1, 2), 2}), vec({q(1, 2), 2})));
  ASSERT_EQ(pt.size(), 1u);
  EXPECT_EQ(pt[0], vec({q(1, 2), 2}));
}

TEST(Vertices, AgreesWithBasisEnumeration) {
  std::mt19937 rng(2024);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int it = 0; it < 60; ++it) {
      Polyhedron p = oracle::random_polytope(rng, n, 1 + it % 5);
      ASSERT_EQ(vertices(p), oracle::basis_vertices(p)) << "n=" << n << " it=" << it;
    }
  }
}

TEST(LatticePoints, Examples) {
  EXPECT_EQ(lattice_points(box(2, q(0), q(1))).size(), 4u);
  auto seg = lattice_points(box(1, q(-1, 2), q(7, 2)));
  std::vector<RVec> expect = {vec({0}), vec({1}), vec({2}), vec({3})};
  EXPECT_EQ(seg, expect);
  Polyhedron tri(2, {Halfspace{vec({1, 1}), q(1)}, geq(vec({1, 0}), q(0)), geq(vec({0, 1}), q(0))});
  std::vector<RVec> tri_expect = {vec({0, 0}), vec({0, 1}), vec({1, 0})};
  EXPECT_EQ(lattice_points(tri), tri_expect);
  EXPECT_TRUE(lattice_points(box(1, q(1, 3), q(2, 3))).empty());
  EXPECT_THROW(lattice_points(Polyhedron(1, {geq(vec({1}), q(0))})), Error);
}

TEST(ConvexHull, CubeAndDegenerateSets) {
  std::vector<RVec> cube;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) cube.push_back(vec({a, b, c}));
  Polyhedron h = convex_hull(cube, 3);
  EXPECT_EQ(h.rows.size(), 6u);
  EXPECT_EQ(vertices(h), cube);

  Polyhedron point = convex_hull({vec({1})}, 1);
  EXPECT_EQ(vertices(point), std::vector<RVec>{vec({1})});

  Polyhedron none = convex_hull({}, 2);
  EXPECT_TRUE(vertices(none).empty());

  // Segment in the plane: lower-dimensional hull keeps its affine equation.
  Polyhedron seg = convex_hull({vec({0, 0}), vec({2, 1})}, 2);
  std::vector<RVec> ends = {vec({0, 0}), vec({2, 1})};
  EXPECT_EQ(vertices(seg), ends);
  EXPECT_FALSE(seg.contains(vec({1, 0})));
  EXPECT_TRUE(seg.contains(vec({1, q(1, 2)})));
}

TEST(ConvexHull, RoundTripsRandomPointSets) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (int it = 0; it < 30; ++it) {
      std::vector<RVec> pts;
      for (int k = 0; k < 10; ++k) {
        RVec x(n);
        for (auto& v : x) v = c(rng);
        pts.push_back(x);
      }
      Polyhedron h = convex_hull(pts, n);
      for (const auto& x : pts) ASSERT_TRUE(h.contains(x));
      for (const auto& v : vertices(h))
        ASSERT_NE(std::find(pts.begin(), pts.end(), v), pts.end()) << to_string(v);
    }
  }
}
