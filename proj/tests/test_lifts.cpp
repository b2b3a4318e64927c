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
#include "liftkit/lifts.hpp"
#include "liftkit/sqrt_rank.hpp"

using namespace liftkit;

namespace {

// The crosspolytope lift Q_n as an explicit slice of R+^{2n}: coordinates
// (u, w) with u_i = y_i + x_i, w_i = y_i - x_i, sum y_i = 1, x = (u - w)/2.
ConeLift crosspolytope_lift(int n) {
  ConeLift lift;
  lift.cone = Cone::Nonneg;
  lift.k = 2 * n;
  lift.eq_a = RatMat::Ones(1, 2 * n);
  lift.eq_b = RatVec::Constant(1, Rat(2));
  lift.proj_a = RatMat::Zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    lift.proj_a(i, i) = Rat(1, 2);
    lift.proj_a(i, n + i) = Rat(-1, 2);
  }
  lift.proj_off = RatVec::Zero(n);
  return lift;
}

// The elliptope: Z in S+^3 with unit diagonal, projecting to (Z_12, Z_13).
ConeLift elliptope_lift() {
  ConeLift lift;
  lift.cone = Cone::Psd;
  lift.k = 3;
  for (int i = 0; i < 3; ++i) {
    RatMat e = RatMat::Zero(3, 3);
    e(i, i) = 1;
    lift.eq_mats.push_back(e);
  }
  lift.eq_b = RatVec::Ones(3);
  RatMat p1 = RatMat::Zero(3, 3), p2 = RatMat::Zero(3, 3);
  p1(0, 1) = p1(1, 0) = Rat(1, 2);
  p2(0, 2) = p2(2, 0) = Rat(1, 2);
  lift.proj_mats = {p1, p2};
  lift.proj_off = RatVec::Zero(2);
  return lift;
}

}  // namespace

TEST_CASE("hexagon lift reproduces the paper slice exactly") {
  Polytope hex = generate(Family::regular_hexagon, 2);
  NonnegFactorization fac = fixtures::hexagon_nonneg_factorization();
  PolyhedralLift lift = build_polyhedral_lift(hex, fac);
  CHECK(lift.k == 5);

  // Eliminating x from {F x + B' y = d} with the printed A, B gives
  // y1+y2+y3+y5 = 2 and y3 - y4 + y5 = 1. (The second equality is stated
  // with a flipped y4 sign elsewhere, but the preimage of the third vertex,
  // row (0,0,0,1,2) of A, pins it down: 0 - 1 + 2 = 1.)
  RatMat expect_a(2, 5);
  expect_a << Rat(1), Rat(1), Rat(1), Rat(0), Rat(1),
              Rat(0), Rat(0), Rat(1), Rat(-1), Rat(1);
  RatVec expect_b(2);
  expect_b << Rat(2), Rat(1);
  CHECK(affine_sets_equal(lift.eq_coeffs, lift.eq_rhs, expect_a, expect_b));
  // Every row of A lies in the computed slice.
  NonnegFactorization src = fixtures::hexagon_nonneg_factorization();
  for (int i = 0; i < 6; ++i) {
    RatVec residual =
        lift.eq_coeffs * RatVec(src.a.row(i).transpose()) - lift.eq_rhs;
    CHECK(residual.isZero());
  }
  // Equality count + slice dimension = k.
  CHECK(lift.eq_coeffs.rows() + (lift.k - rank_exact(lift.eq_coeffs)) ==
        lift.k);

  LiftVerification ver = verify_lift(hex, lift);
  CHECK(ver.verdict);
  CHECK(ver.exact);
  for (const Rat& value : ver.facet_support_exact) CHECK(value == Rat(1));

  // Float mode agrees within solver tolerance.
  LiftVerification fl = verify_lift(hex, lift, 1e-6, /*exact_lp=*/false);
  CHECK(fl.verdict);
  CHECK(!fl.exact);
  for (double value : fl.facet_support_values)
    CHECK(std::fabs(value - 1.0) <= 1e-6);
}

TEST_CASE("square with trivial factorization gives two equalities") {
  Polytope sq = fixtures::paper_square();
  RatMat s = slack_matrix(sq).entries;
  NonnegFactorization fac{4, s, RatMat::Identity(4, 4)};
  PolyhedralLift lift = build_polyhedral_lift(sq, fac);
  CHECK(lift.k == 4);
  CHECK(lift.eq_coeffs.rows() == 2);
  CHECK(verify_lift(sq, lift).verdict);
}

TEST_CASE("invalid factorization is rejected") {
  Polytope hex = generate(Family::regular_hexagon, 2);
  NonnegFactorization bad = fixtures::hexagon_nonneg_factorization();
  bad.a(0, 0) = Rat(5);
  CHECK_THROWS_AS(build_polyhedral_lift(hex, bad), Error);
}

TEST_CASE("perturbed hexagon slice fails verification") {
  Polytope hex = generate(Family::regular_hexagon, 2);
  PolyhedralLift lift =
      build_polyhedral_lift(hex, fixtures::hexagon_nonneg_factorization());
  lift.eq_rhs(0) = lift.eq_rhs(0) + 1;  // rhs 2 -> 3 in the stated basis
  LiftVerification ver = verify_lift(hex, lift);
  CHECK(!ver.verdict);
}

TEST_CASE("square psd lift from the paper factors") {
  Polytope sq = fixtures::paper_square();
  PsdFactorization fac = fixtures::square_psd_factorization_scaled();
  SpectrahedralLift lift = build_psd_lift(sq, fac);
  CHECK(lift.k == 3);
  LiftVerification ver = verify_lift(sq, lift, 1e-6);
  CHECK(ver.verdict);
  for (double value : ver.facet_support_values)
    CHECK(std::fabs(value - 1.0) <= 1e-6);
  // All four vertices have preimages.
  for (bool ok : ver.vertex_feasible) CHECK(ok);

  PsdFactorization bad = fac;
  bad.col_exact[0] *= Rat(3, 2);
  bad.col_factors[0] *= 1.5;
  CHECK_THROWS_AS(build_psd_lift(sq, bad), Error);
}

TEST_CASE("segment lift from a sqrt certificate") {
  RatMat verts(2, 1), normals(2, 1);
  verts << Rat(-1), Rat(1);
  normals << Rat(1), Rat(-1);
  Polytope seg = Polytope::from_reps(PolytopeV{1, verts, "segment"},
                                     PolytopeH{1, normals});
  RatMat s = slack_matrix(seg).entries;  // [[2,0],[0,2]] up to order
  SqrtRankResult sr = sqrt_rank(s);
  REQUIRE(sr.complete);
  PsdFactorization fac = psd_from_sqrt(s, sr.certificate);
  CHECK(fac.k == 2);
  SpectrahedralLift lift = build_psd_lift(seg, fac);
  CHECK(verify_lift(seg, lift, 1e-6).verdict);
}

TEST_CASE("crosspolytope Q3 lift verifies and extracts a factorization") {
  Polytope cp = generate(Family::crosspolytope, 3);
  ConeLift lift = crosspolytope_lift(3);
  LiftVerification ver = verify_lift(cp, lift);
  CHECK(ver.verdict);

  ProperCheck proper = lift_properness(lift);
  CHECK(proper.proper);

  ExtractedFactorization ext = lift_to_factorization(cp, lift);
  REQUIRE(ext.nonneg.has_value());
  CHECK(ext.nonneg->k == 6);
  CHECK(verify_nonneg_factorization(slack_matrix(cp).entries, *ext.nonneg));

  // Round trip: rebuild a lift from the extracted factorization.
  PolyhedralLift rebuilt = build_polyhedral_lift(cp, *ext.nonneg);
  CHECK(verify_lift(cp, rebuilt).verdict);
}

TEST_CASE("hexagon round trip through lift and extraction") {
  Polytope hex = generate(Family::regular_hexagon, 2);
  PolyhedralLift lift =
      build_polyhedral_lift(hex, fixtures::hexagon_nonneg_factorization());
  ExtractedFactorization ext = lift_to_factorization(hex, to_cone_lift(lift));
  REQUIRE(ext.nonneg.has_value());
  CHECK(verify_nonneg_factorization(slack_matrix(hex).entries, *ext.nonneg));
}

TEST_CASE("elliptope lift verifies and yields a size-3 psd factorization") {
  Polytope sq = fixtures::paper_square();
  ConeLift lift = elliptope_lift();
  LiftVerification ver = verify_lift(sq, lift, 1e-5);
  CHECK(ver.verdict);

  ExtractedFactorization ext = lift_to_factorization(sq, lift, 1e-5);
  REQUIRE(ext.psd.has_value());
  CHECK(ext.psd->k == 3);
  CHECK(verify_psd_factorization(slack_matrix(sq).entries, *ext.psd, 1e-5));

  // Round trip B: rebuild a spectrahedral lift from the extraction.
  SpectrahedralLift rebuilt = build_psd_lift(sq, *ext.psd, 1e-5);
  CHECK(verify_lift(sq, rebuilt, 1e-5).verdict);
}

TEST_CASE("square psd round trip through extraction") {
  Polytope sq = fixtures::paper_square();
  SpectrahedralLift lift =
      build_psd_lift(sq, fixtures::square_psd_factorization_scaled());
  ExtractedFactorization ext =
      lift_to_factorization(sq, to_cone_lift(lift, sq), 1e-5);
  REQUIRE(ext.psd.has_value());
  CHECK(verify_psd_factorization(slack_matrix(sq).entries, *ext.psd, 1e-5));
}

TEST_CASE("improper slice is reported") {
  // Slice touching R+^2 only at a face: y1 + y2 = 0 forces y = 0.
  ConeLift lift;
  lift.cone = Cone::Nonneg;
  lift.k = 2;
  lift.eq_a = RatMat::Ones(1, 2);
  lift.eq_b = RatVec::Zero(1);
  lift.proj_a = RatMat::Zero(1, 2);
  lift.proj_a(0, 0) = 1;
  lift.proj_off = RatVec::Zero(1);
  ProperCheck proper = lift_properness(lift);
  CHECK(!proper.proper);

  RatMat verts(2, 1), normals(2, 1);
  verts << Rat(-1), Rat(1);
  normals << Rat(1), Rat(-1);
  Polytope seg = Polytope::from_reps(PolytopeV{1, verts, "segment"},
                                     PolytopeH{1, normals});
  CHECK_THROWS_AS(lift_to_factorization(seg, lift), Error);
}

TEST_CASE("verification is invariant under slice re-coordinatization") {
  // Apply an invertible map to the hexagon slice variables: y = T z turns
  // {E y = e, y >= 0} into a different presentation of the same polytope
  // projection only if T preserves the positive orthant; use a permutation.
  Polytope hex = generate(Family::regular_hexagon, 2);
  PolyhedralLift lift =
      build_polyhedral_lift(hex, fixtures::hexagon_nonneg_factorization());
  std::vector<int> perm = {3, 0, 4, 1, 2};
  RatMat t = RatMat::Zero(5, 5);
  for (int i = 0; i < 5; ++i) t(perm[i], i) = 1;
  PolyhedralLift moved = lift;
  moved.eq_coeffs = lift.eq_coeffs * t;
  moved.recover_mat = lift.recover_mat * t;
  LiftVerification ver = verify_lift(hex, moved);
  CHECK(ver.verdict);
}
