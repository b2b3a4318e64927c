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

#include "fixtures.hpp"
#include "liftkit/nonneg_search.hpp"

using namespace liftkit;

TEST_CASE("trivial searches") {
  RatMat d(2, 2);
  d << Rat(3), Rat(0), Rat(0), Rat(5);
  auto res = search_nonneg_factorization(d, 2);
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(verify_nonneg_factorization(d, *res.factorization));

  RatMat z = RatMat::Zero(3, 3);
  CHECK(search_nonneg_factorization(z, 1).status == SearchStatus::Found);
}

TEST_CASE("diagonal needs full rank") {
  RatMat d(3, 3);
  d << Rat(1), Rat(0), Rat(0),
       Rat(0), Rat(1), Rat(0),
       Rat(0), Rat(0), Rat(1);
  auto res = search_nonneg_factorization(d, 2);
  CHECK(res.status == SearchStatus::Infeasible);
  CHECK(res.log.enumeration_complete);
}

TEST_CASE("regular hexagon slack matrix factors at k = 5") {
  auto res = search_nonneg_factorization(fixtures::hexagon_slack(), 5);
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(verify_nonneg_factorization(fixtures::hexagon_slack(),
                                    *res.factorization));
  CHECK(res.factorization->k == 5);
}

TEST_CASE("regular hexagon slack matrix is infeasible at k = 4") {
  auto res = search_nonneg_factorization(fixtures::hexagon_slack(), 4);
  CHECK(res.status == SearchStatus::Infeasible);
  CHECK(res.log.enumeration_complete);
  CHECK(res.log.covers_undecided == 0);
  CHECK(res.log.smaller_covers == 0);
}

TEST_CASE("irregular hexagon has no R+^5 factorization") {
  auto res =
      search_nonneg_factorization(fixtures::irregular_hexagon_matrix(), 5);
  CHECK(res.status == SearchStatus::Infeasible);
  CHECK(res.log.enumeration_complete);
  CHECK(res.log.covers_examined > 0);
  CHECK(res.log.covers_refuted == res.log.covers_examined);

  // The generated polytope's slack matrix (columns rescaled, transposed
  // orientation) must agree.
  Polytope p = generate(Family::irregular_hexagon, 2);
  auto res2 = search_nonneg_factorization(slack_matrix(p).entries, 5);
  CHECK(res2.status == SearchStatus::Infeasible);
}

TEST_CASE("budget exhaustion reports Unknown, never Infeasible") {
  SearchBudget tiny;
  tiny.max_patterns = 5;
  auto res =
      search_nonneg_factorization(fixtures::irregular_hexagon_matrix(), 5, tiny);
  CHECK(res.status == SearchStatus::Unknown);
  CHECK(!res.log.enumeration_complete);
}

TEST_CASE("search result is deterministic") {
  auto a = search_nonneg_factorization(fixtures::hexagon_slack(), 5);
  auto b = search_nonneg_factorization(fixtures::hexagon_slack(), 5);
  REQUIRE(a.status == SearchStatus::Found);
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(a.factorization->a == b.factorization->a);
  CHECK(a.factorization->b == b.factorization->b);
}
