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

#include <cmath>

#include "liftkit/sdp.hpp"

using namespace liftkit;

TEST_CASE("psd_check basics") {
  CHECK(psd_check(Eigen::MatrixXd::Identity(3, 3), 1e-7));
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -1e-3;
  CHECK(!psd_check(d, 1e-7));
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 2, 0, 1;
  CHECK_THROWS_AS(psd_check(asym, 1e-7), Error);
}

TEST_CASE("max trace(X) s.t. X <= I via slack block") {
  // Variables: X (2x2) and slack S with X + S = I.
  SdpProblem p;
  p.block_sizes = {2, 2};
  p.maximize = true;
  p.objective = BlockMatrix::zero(p.block_sizes);
  p.objective.blocks[0] = Eigen::MatrixXd::Identity(2, 2);
  auto entry = [&](int bi, int r, int c) {
    BlockMatrix a = BlockMatrix::zero(p.block_sizes);
    a.blocks[bi](r, c) = 1;
    a.blocks[bi](c, r) = 1;
    if (r == c) a.blocks[bi](r, c) = 1;
    return a;
  };
  // X_11 + S_11 = 1, X_22 + S_22 = 1, X_12 + S_12 = 0.
  std::vector<std::tuple<int, int, double>> cons = {
      {0, 0, 1.0}, {1, 1, 1.0}, {0, 1, 0.0}};
  p.rhs.resize(3);
  int idx = 0;
  for (auto [r, c, rhs] : cons) {
    BlockMatrix a = entry(0, r, c);
    BlockMatrix b = entry(1, r, c);
    for (int bb = 0; bb < 2; ++bb) a.blocks[1] = b.blocks[1];
    p.constraints.push_back(a);
    p.rhs(idx++) = rhs;
  }
  SdpSolution sol = solve_sdp(p);
  REQUIRE(sol.status == SdpStatus::Optimal);
  CHECK(std::fabs(sol.primal_obj - 2.0) <= 1e-5);
  // Returned solutions re-verify their invariants.
  for (const auto& blk : sol.x.blocks) CHECK(psd_check(blk, 1e-6));
  for (size_t i = 0; i < p.constraints.size(); ++i)
    CHECK(std::fabs(p.constraints[i].dot(sol.x) - p.rhs(i)) <= 1e-6);
  CHECK(sol.duality_gap <= 1e-4);
}

TEST_CASE("solve_lmi maximizes an eigenvalue bound") {
  // max t s.t. diag(1, 2) - t I >= 0 -> t = 1.
  BlockMatrix f0;
  f0.blocks = {Eigen::MatrixXd::Zero(2, 2)};
  f0.blocks[0](0, 0) = 1;
  f0.blocks[0](1, 1) = 2;
  BlockMatrix ft;
  ft.blocks = {-Eigen::MatrixXd::Identity(2, 2)};
  Eigen::VectorXd b(1);
  b << 1;
  SdpSolution sol = solve_lmi(f0, {ft}, b);
  REQUIRE(sol.status == SdpStatus::Optimal);
  CHECK(std::fabs(sol.primal_obj - 1.0) <= 1e-5);
  CHECK(psd_check(sol.s.blocks[0], 1e-5));
}

TEST_CASE("lmi boundary feasibility lands at zero") {
  // max t s.t. [[1, 1], [1, 1]] - tI >= 0 -> t = 0.
  BlockMatrix f0;
  f0.blocks = {Eigen::MatrixXd::Ones(2, 2)};
  BlockMatrix ft;
  ft.blocks = {-Eigen::MatrixXd::Identity(2, 2)};
  Eigen::VectorXd b(1);
  b << 1;
  SdpSolution sol = solve_lmi(f0, {ft}, b);
  REQUIRE(sol.status == SdpStatus::Optimal);
  CHECK(std::fabs(sol.primal_obj) <= 1e-6);
}

TEST_CASE("rank-deficient constraints raise IllPosed") {
  SdpProblem p;
  p.block_sizes = {1};
  p.maximize = false;
  p.objective = BlockMatrix::identity(p.block_sizes);
  BlockMatrix a = BlockMatrix::identity(p.block_sizes);
  p.constraints = {a, a};
  p.rhs.resize(2);
  p.rhs << 1, 1;
  CHECK_THROWS_AS(solve_sdp(p), Error);
}

TEST_CASE("weak duality at the returned solution") {
  // max <I, X> s.t. trace(X) = 3, X psd (2x2): optimum 3.
  SdpProblem p;
  p.block_sizes = {2};
  p.maximize = true;
  p.objective = BlockMatrix::identity(p.block_sizes);
  p.constraints = {BlockMatrix::identity(p.block_sizes)};
  p.rhs.resize(1);
  p.rhs << 3;
  SdpSolution sol = solve_sdp(p);
  REQUIRE(sol.status == SdpStatus::Optimal);
  CHECK(std::fabs(sol.primal_obj - 3.0) <= 1e-5);
  CHECK(sol.primal_obj <= sol.dual_obj + 1e-4);
}
