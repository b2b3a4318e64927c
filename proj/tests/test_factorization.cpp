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

#include <random>

#include "fixtures.hpp"
#include "liftkit/error.hpp"
#include "liftkit/psd_bounds.hpp"
#include "liftkit/sdp.hpp"

using namespace liftkit;

TEST_CASE("hexagon nonneg factorization verifies exactly") {
  RatMat s = fixtures::hexagon_slack();
  NonnegFactorization fac = fixtures::hexagon_nonneg_factorization();
  CHECK(verify_nonneg_factorization(s, fac));

  // Single-entry perturbation breaks it.
  NonnegFactorization bad = fac;
  bad.a(0, 0) = Rat(2);
  CHECK(!verify_nonneg_factorization(s, bad));
}

TEST_CASE("diagonal factorization and shape checks") {
  RatMat d(2, 2);
  d << Rat(3), Rat(0), Rat(0), Rat(5);
  NonnegFactorization fac{2, d, RatMat::Identity(2, 2)};
  CHECK(verify_nonneg_factorization(d, fac));
  NonnegFactorization wrong{3, d, RatMat::Identity(2, 2)};
  CHECK_THROWS_AS(verify_nonneg_factorization(d, wrong), Error);
}

TEST_CASE("square psd factorization verifies within 1e-7") {
  RatMat s01 = fixtures::square_slack_01();
  PsdFactorization fac = fixtures::square_psd_factorization();
  CHECK(verify_psd_factorization(s01, fac, 1e-7));
  for (const auto& f : fac.row_factors) CHECK(psd_check(f, 1e-9));
  for (const auto& f : fac.col_factors) CHECK(psd_check(f, 1e-9));

  // Perturbed factor fails the trace pairing.
  PsdFactorization bad = fac;
  bad.row_factors[0](0, 1) += 0.01;
  bad.row_factors[0](1, 0) += 0.01;
  CHECK(!verify_psd_factorization(s01, bad, 1e-7));

  // Asymmetric factor is rejected loudly.
  PsdFactorization asym = fac;
  asym.row_factors[0](0, 1) += 1.0;
  CHECK_THROWS_AS(verify_psd_factorization(s01, asym, 1e-7), Error);
}

TEST_CASE("scaled factorization matches the exact square slack matrix") {
  Polytope sq = fixtures::paper_square();
  RatMat s = slack_matrix(sq).entries;
  PsdFactorization fac = fixtures::square_psd_factorization_scaled();
  CHECK(verify_psd_factorization(s, fac, 1e-7));
}

TEST_CASE("disc slack operator factors on a rational boundary grid") {
  // Boundary points (x, y) = ((1-t^2)/(1+t^2), 2t/(1+t^2)); factors
  // A = [[1+x, y], [y, 1-x]], B = (1/2) [[1-x, -y], [-y, 1+x]].
  std::vector<double> ts;
  for (int i = 0; i < 16; ++i) ts.push_back(-2.0 + 0.27 * i);
  auto point = [](double t) {
    double d = 1 + t * t;
    return std::pair<double, double>{(1 - t * t) / d, 2 * t / d};
  };
  for (double t1 : ts)
    for (double t2 : ts) {
      auto [x1, y1] = point(t1);
      auto [x2, y2] = point(t2);
      Eigen::MatrixXd a(2, 2), b(2, 2);
      a << 1 + x1, y1, y1, 1 - x1;
      b << 1 - x2, -y2, -y2, 1 + x2;
      b *= 0.5;
      double pairing = a.cwiseProduct(b).sum();
      CHECK(std::fabs(pairing - (1 - x1 * x2 - y1 * y2)) <= 1e-12);
      CHECK(psd_check(a, 1e-12));
      CHECK(psd_check(b, 1e-12));
    }
}

TEST_CASE("ball lift maps factor the slack operator") {
  // A(x) = [[XX', X], [X', I]], B(y) = (1/2)[[I, -Y], [-Y', YY']]; the trace
  // pairing equals 1 - <x, y> on the unit sphere.
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  for (int n : {2, 3}) {
    int d = n * n;
    for (int rep = 0; rep < 10; ++rep) {
      Eigen::VectorXd x(d), y(d);
      for (int i = 0; i < d; ++i) {
        x(i) = gauss(rng);
        y(i) = gauss(rng);
      }
      x.normalize();
      y.normalize();
      Eigen::MatrixXd xm =
          Eigen::Map<Eigen::MatrixXd>(x.data(), n, n).transpose();
      Eigen::MatrixXd ym =
          Eigen::Map<Eigen::MatrixXd>(y.data(), n, n).transpose();
      Eigen::MatrixXd a(2 * n, 2 * n), b(2 * n, 2 * n);
      a << xm * xm.transpose(), xm, xm.transpose(),
          Eigen::MatrixXd::Identity(n, n);
      // B = (1/2) [I, -Y; -Y', Y'Y] is the Gram form [I; -Y']*[I, -Y]/2.
      b << Eigen::MatrixXd::Identity(n, n), -ym, -ym.transpose(),
          ym.transpose() * ym;
      b *= 0.5;
      double pairing = a.cwiseProduct(b).sum();
      CHECK(std::fabs(pairing - (1 - x.dot(y))) <= 1e-10);
      CHECK(psd_check(a, 1e-9));
      CHECK(psd_check(b, 1e-9));
    }
  }
}

TEST_CASE("sampled slack operators verify as psd factorizations") {
  // The slack operator of a smooth body restricted to boundary samples is a
  // plain nonnegative matrix; the paper maps evaluated at the samples must
  // verify as a psd factorization of it.
  auto point = [](double t) {
    double d = 1 + t * t;
    return std::pair<double, double>{(1 - t * t) / d, 2 * t / d};
  };
  PsdFactorization fac;
  fac.k = 2;
  std::vector<std::pair<double, double>> xs, ys;
  for (int i = 0; i < 8; ++i) {
    xs.push_back(point(-1.7 + 0.45 * i));
    ys.push_back(point(-2.1 + 0.53 * i));
  }
  Eigen::MatrixXd target(8, 8);
  for (int i = 0; i < 8; ++i) {
    auto [x1, y1] = xs[i];
    Eigen::MatrixXd a(2, 2);
    a << 1 + x1, y1, y1, 1 - x1;
    fac.row_factors.push_back(a);
  }
  for (int j = 0; j < 8; ++j) {
    auto [x2, y2] = ys[j];
    Eigen::MatrixXd b(2, 2);
    b << 1 - x2, -y2, -y2, 1 + x2;
    fac.col_factors.push_back(0.5 * b);
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      target(i, j) =
          1 - xs[i].first * ys[j].first - xs[i].second * ys[j].second;
  CHECK(verify_psd_factorization(target, fac, 1e-9));
}

TEST_CASE("psd rank bound report formulas") {
  Polytope sq = fixtures::paper_square();
  RatMat s = slack_matrix(sq).entries;
  PolytopeContext ctx;
  ctx.n = 2;
  ctx.v = 4;
  ctx.f = 4;
  PsdRankBoundReport rep = psd_rank_bounds(s, ctx);
  CHECK(rep.matrix_rank == 3);
  CHECK(rep.rank_formula_lb == 2);  // (sqrt(25)-1)/2
  CHECK(*rep.polytope_dim_lb == 3);
  CHECK(rep.upper_bound == 4);
  CHECK(*rep.linear_ext_lb == 2);

  // rank 6 matrix -> formula gives 3.
  RatMat d6 = RatMat::Identity(6, 6);
  CHECK(psd_rank_bounds(d6).rank_formula_lb == 3);

  // d = 65536 -> sqrt(log2 d) = 4.
  PolytopeContext dctx;
  dctx.algebraic_degree = 65536.0;
  RatMat dummy = RatMat::Identity(6, 6);
  CHECK(*psd_rank_bounds(dummy, dctx).degree_lb == 4);

  // Inconsistent witness: claimed size below the dimension bound.
  PolytopeContext bad;
  bad.n = 5;
  CHECK_THROWS_AS(psd_rank_bounds(dummy, bad, 2), Error);
}

TEST_CASE("scaling covariance of verification") {
  RatMat s = fixtures::hexagon_slack();
  NonnegFactorization fac = fixtures::hexagon_nonneg_factorization();
  RatMat s2 = s;
  NonnegFactorization fac2 = fac;
  for (int j = 0; j < 6; ++j) {
    Rat lambda(j + 1, 3);
    for (int i = 0; i < 6; ++i) s2(i, j) *= lambda;
    for (int l = 0; l < 5; ++l) fac2.b(l, j) *= lambda;
  }
  CHECK(verify_nonneg_factorization(s2, fac2));
}
