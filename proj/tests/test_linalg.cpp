// Copyright 2026 The Liftkit Authors
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

#include <doctest.h>

#include "liftkit/error.hpp"
#include "liftkit/linalg.hpp"
#include "liftkit/quadfield.hpp"

using namespace liftkit;

TEST_CASE("rational parsing round-trips") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-7")) == "-7");
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-1.5e2") == Rat(-150));
  CHECK(rat_from_double_exact(0.5) == Rat(1, 2));
  CHECK(rat_from_double_exact(-3.0) == Rat(-3));
  CHECK(rat_round(0.333333333333, 100) == Rat(1, 3));
  CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("exact rank by elimination") {
  RatMat z = RatMat::Zero(3, 3);
  CHECK(rank_exact(z) == 0);
  RatMat id = RatMat::Identity(4, 4);
  CHECK(rank_exact(id) == 4);
  RatMat m(3, 3);
  m << Rat(1), Rat(2), Rat(3),
       Rat(2), Rat(4), Rat(6),
       Rat(1), Rat(0), Rat(1);
  CHECK(rank_exact(m) == 2);
}

TEST_CASE("nullspace and solve") {
  RatMat m(2, 3);
  m << Rat(1), Rat(1), Rat(0),
       Rat(0), Rat(1), Rat(1);
  RatMat ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).isZero());

  RatVec b(2);
  b << Rat(3), Rat(5);
  auto x = solve_linear(m, b);
  REQUIRE(x.has_value());
  CHECK(RatVec(m * *x) == b);

  RatMat bad(2, 1);
  bad << Rat(1), Rat(1);
  RatVec rhs(2);
  rhs << Rat(1), Rat(2);
  CHECK(!solve_linear(bad, rhs).has_value());
}

TEST_CASE("inverse and normal equations") {
  RatMat m(2, 2);
  m << Rat(2), Rat(1), Rat(1), Rat(1);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(RatMat(m * *inv) == RatMat::Identity(2, 2));

  // Overdetermined consistent system.
  RatMat f(3, 2);
  f << Rat(1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(1);
  RatVec target(3);
  target << Rat(2), Rat(5), Rat(7);
  RatVec sol = solve_normal_equations(f, target);
  CHECK(RatVec(f * sol) == target);
}

TEST_CASE("affine set comparison ignores presentation") {
  // y1+y2+y3+y5 = 2, y3+y4+y5 = 1 in two different bases.
  RatMat a1(2, 5), a2(2, 5);
  a1 << Rat(1), Rat(1), Rat(1), Rat(0), Rat(1),
        Rat(0), Rat(0), Rat(1), Rat(1), Rat(1);
  RatVec b1(2);
  b1 << Rat(2), Rat(1);
  // Row-reduced variant: subtract the second from the first.
  a2 << Rat(1), Rat(1), Rat(0), Rat(-1), Rat(0),
        Rat(0), Rat(0), Rat(1), Rat(1), Rat(1);
  RatVec b2(2);
  b2 << Rat(1), Rat(1);
  CHECK(affine_sets_equal(a1, b1, a2, b2));
  RatVec b3 = b2;
  b3(0) = Rat(2);
  CHECK(!affine_sets_equal(a1, b1, a2, b3));
}

TEST_CASE("quadratic tower arithmetic") {
  QuadTower t;
  int i2 = t.add_generator(2);
  int i3 = t.add_generator(3);
  CHECK(t.generators() == 2);
  // (1 + sqrt2)(1 - sqrt2) = -1
  auto a = t.from_rat(1);
  a[1ull << i2] = 1;
  auto b = t.from_rat(1);
  b[1ull << i2] = -1;
  std::vector<Rat> prod;
  t.mul(a, b, prod);
  CHECK(prod[0] == Rat(-1));
  // sqrt2 * sqrt3 = sqrt6
  auto s2 = t.zero();
  s2[1ull << i2] = 1;
  auto s3 = t.zero();
  s3[1ull << i3] = 1;
  t.mul(s2, s3, prod);
  CHECK(prod[(1ull << i2) | (1ull << i3)] == Rat(1));
  // inverse of (1 + sqrt2 + sqrt3)
  auto e = t.from_rat(1);
  e[1ull << i2] = 1;
  e[1ull << i3] = 1;
  auto inv = t.inverse(e);
  t.mul(e, inv, prod);
  CHECK(prod[0] == Rat(1));
  for (size_t s = 1; s < prod.size(); ++s) CHECK(prod[s] == Rat(0));
}

TEST_CASE("sqrt decomposition") {
  auto d = sqrt_decompose(Rat(4, 9));
  REQUIRE(d.has_value());
  CHECK(d->coeff == Rat(2, 3));
  CHECK(d->radicand == 1);
  d = sqrt_decompose(Rat(2));
  REQUIRE(d.has_value());
  CHECK(d->coeff == Rat(1));
  CHECK(d->radicand == 2);
  d = sqrt_decompose(Rat(12));
  REQUIRE(d.has_value());
  CHECK(d->coeff == Rat(2));
  CHECK(d->radicand == 3);
  d = sqrt_decompose(Rat(1, 2));  // sqrt(1/2) = (1/2) sqrt 2
  REQUIRE(d.has_value());
  CHECK(d->coeff == Rat(1, 2));
  CHECK(d->radicand == 2);
  CHECK(!sqrt_decompose(Rat(-1)).has_value());
}

TEST_CASE("tower matrix rank distinguishes sign patterns") {
  // [[sqrt2, sqrt2],[sqrt2, sqrt2]] has rank 1; flipping one sign gives 2.
  QuadTower t;
  int g = t.add_generator(2);
  auto s2 = t.zero();
  s2[1ull << g] = 1;
  TowerMatrix m(t, 2, 2);
  m.at(0, 0) = s2;
  m.at(0, 1) = s2;
  m.at(1, 0) = s2;
  m.at(1, 1) = s2;
  CHECK(m.rank() == 1);
  auto neg = s2;
  neg[1ull << g] = -1;
  m.at(1, 1) = neg;
  CHECK(m.rank() == 2);
}
