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
#include "liftkit/minimality.hpp"
#include "liftkit/psd_bounds.hpp"

using namespace liftkit;

namespace {

// Cyclic n-gon slack pattern: vertex i on facets i and i+1.
Eigen::MatrixXi ngon_pattern(int n) {
  Eigen::MatrixXi p = Eigen::MatrixXi::Ones(n, n);
  for (int i = 0; i < n; ++i) {
    p(i, i) = 0;
    p(i, (i + 1) % n) = 0;
  }
  return p;
}

SymbolicSlackPattern to_symbolic(const Eigen::MatrixXi& support) {
  SymbolicSlackPattern s;
  s.support = support;
  s.var_index = Eigen::MatrixXi::Constant(support.rows(), support.cols(), -1);
  for (int i = 0; i < support.rows(); ++i)
    for (int j = 0; j < support.cols(); ++j)
      if (support(i, j)) s.var_index(i, j) = s.num_vars++;
  return s;
}

}  // namespace

TEST_CASE("support permanent counts") {
  Eigen::MatrixXi id2(2, 2);
  id2 << 1, 0, 0, 1;
  CHECK(support_permanent_count(id2) == 1);

  CHECK(support_permanent_count(Eigen::MatrixXi::Ones(3, 3)) == 6);

  // The pentagon 4x4 pattern whose determinant is a trinomial.
  Eigen::MatrixXi pent(4, 4);
  pent << 0, 1, 1, 1,
          0, 0, 1, 1,
          1, 0, 0, 1,
          1, 1, 0, 0;
  CHECK(support_permanent_count(pent) == 3);
  CHECK(support_permanent_count_capped(pent, 2) == 3);

  // Invariance under transpose and permutations.
  Eigen::MatrixXi pt = pent.transpose();
  CHECK(support_permanent_count(pt) == 3);
  Eigen::MatrixXi perm(4, 4);
  perm.row(0) = pent.row(2);
  perm.row(1) = pent.row(0);
  perm.row(2) = pent.row(3);
  perm.row(3) = pent.row(1);
  CHECK(support_permanent_count(perm) == 3);
}

TEST_CASE("trinomial obstruction on polygon patterns") {
  // Pentagon: witness exists.
  TrinomialScan pent = trinomial_obstruction(to_symbolic(ngon_pattern(5)), 2);
  CHECK(pent.complete);
  REQUIRE(pent.witness.has_value());
  CHECK(pent.witness->monomial_count == 3);
  CHECK(pent.witness->rows.size() == 4);
  CHECK(pent.witness->permutations.size() == 3);

  // Hexagon: also obstructed (any n-gon with n > 4).
  TrinomialScan hex = trinomial_obstruction(to_symbolic(ngon_pattern(6)), 2);
  REQUIRE(hex.witness.has_value());
  CHECK(hex.witness->monomial_count == 3);

  // Quadrilateral: full scan, no witness.
  TrinomialScan quad = trinomial_obstruction(to_symbolic(ngon_pattern(4)), 2);
  CHECK(quad.complete);
  CHECK(!quad.witness.has_value());
}

TEST_CASE("quad pyramid pattern from the degree-4-vertex lemma") {
  // Rows v, v1, v2, v3, v4; columns F1..F4, F.
  Eigen::MatrixXi m(5, 5);
  m << 0, 0, 0, 0, 1,
       0, 0, 1, 1, 1,
       1, 0, 0, 1, 1,
       1, 1, 0, 0, 1,
       1, 1, 1, 0, 1;
  SymbolicSlackPattern sp = to_symbolic(m);
  TrinomialScan scan = trinomial_obstruction(sp, 3);
  REQUIRE(scan.witness.has_value());
  CHECK(scan.witness->monomial_count == 3);
}

TEST_CASE("two-level test on fixtures") {
  CHECK(two_level_test(generate(Family::cube, 3)));
  CHECK(two_level_test(generate(Family::crosspolytope, 3)));
  CHECK(two_level_test(generate(Family::simplex, 4)));
  CHECK(!two_level_test(generate(Family::regular_hexagon, 2)));
  CHECK(!two_level_test(generate(Family::bisimplex, 3)));
}

TEST_CASE("two-level fixtures are psd-minimal when enumeration completes") {
  for (auto [family, n] : std::vector<std::pair<Family, int>>{
           {Family::cube, 3},
           {Family::crosspolytope, 3},
           {Family::simplex, 3},
           {Family::simplex, 4}}) {
    Polytope p = generate(family, n);
    if (!two_level_test(p)) continue;
    auto res = psd_minimality_test(p);
    if (res.sqrt_scan_complete)
      CHECK(res.verdict == MinimalityVerdict::Minimal);
  }
}

TEST_CASE("classification of 3-polytopes") {
  CHECK(classify_3polytope(generate(Family::simplex, 3)).cls ==
        ThreePolytopeClass::Simplex);
  CHECK(classify_3polytope(generate(Family::quad_pyramid, 3)).cls ==
        ThreePolytopeClass::QuadPyramid);
  CHECK(classify_3polytope(generate(Family::bisimplex, 3)).cls ==
        ThreePolytopeClass::Bisimplex);
  CHECK(classify_3polytope(generate(Family::cube, 3)).cls ==
        ThreePolytopeClass::DualOfAbove);
  CHECK(classify_3polytope(polar(generate(Family::bisimplex, 3))).cls ==
        ThreePolytopeClass::DualOfAbove);

  Classification3 oct = classify_3polytope(generate(Family::octahedron, 3));
  CHECK(oct.cls == ThreePolytopeClass::Octahedron);
  REQUIRE(oct.biplanar.has_value());
  CHECK(*oct.biplanar);

  CHECK_THROWS_AS(classify_3polytope(fixtures::paper_square()), Error);
}

TEST_CASE("apex perturbation off both symmetry planes kills biplanarity") {
  RatMat v(6, 3);
  v << Rat(1), Rat(0), Rat(0),
       Rat(-1), Rat(0), Rat(0),
       Rat(0), Rat(1), Rat(0),
       Rat(0), Rat(-1), Rat(0),
       Rat(1, 9), Rat(1, 7), Rat(9, 8),
       Rat(0), Rat(0), Rat(-1);
  Polytope oct = make_octahedron(v, "perturbed");
  Classification3 cls = classify_3polytope(oct);
  CHECK(cls.cls == ThreePolytopeClass::Octahedron);
  REQUIRE(cls.biplanar.has_value());
  CHECK(!*cls.biplanar);
}

TEST_CASE("apex moved within a coordinate plane keeps biplanarity") {
  // (0, 1/7, 9/8) keeps x = 0, so the plane through the y-pair and both
  // apexes still holds four vertices next to z = 0.
  RatMat v(6, 3);
  v << Rat(1), Rat(0), Rat(0),
       Rat(-1), Rat(0), Rat(0),
       Rat(0), Rat(1), Rat(0),
       Rat(0), Rat(-1), Rat(0),
       Rat(0), Rat(1, 7), Rat(9, 8),
       Rat(0), Rat(0), Rat(-1);
  Polytope oct = make_octahedron(v, "in-plane");
  Classification3 cls = classify_3polytope(oct);
  REQUIRE(cls.biplanar.has_value());
  CHECK(*cls.biplanar);
}

TEST_CASE("biplanarity is invariant under linear maps") {
  // Regular octahedron scaled anisotropically by diag(1, 2, 3).
  RatMat v(6, 3);
  v << Rat(1), Rat(0), Rat(0),
       Rat(-1), Rat(0), Rat(0),
       Rat(0), Rat(2), Rat(0),
       Rat(0), Rat(-2), Rat(0),
       Rat(0), Rat(0), Rat(3),
       Rat(0), Rat(0), Rat(-3);
  Polytope oct = make_octahedron(v, "scaled");
  CHECK(biplanar_test(oct));
  CHECK_THROWS_AS(biplanar_test(generate(Family::cube, 3)), Error);
}

TEST_CASE("trinomial obstruction blocks minimality verdicts") {
  // Cross-module consistency: when the obstruction fires the minimality
  // test must not return Minimal.
  for (Family family : {Family::regular_hexagon, Family::irregular_hexagon}) {
    Polytope p = generate(family, 2);
    SlackMatrix s = slack_matrix(p);
    TrinomialScan scan = trinomial_obstruction(symbolic_pattern(s), 2);
    REQUIRE(scan.witness.has_value());
    CHECK(psd_minimality_test(p).verdict != MinimalityVerdict::Minimal);
  }
}

TEST_CASE("classification is invariant under affine maps") {
  // Shear the bisimplex.
  Polytope p = generate(Family::bisimplex, 3);
  RatMat t(3, 3);
  t << Rat(1), Rat(1, 2), Rat(0),
       Rat(0), Rat(1), Rat(1, 3),
       Rat(0), Rat(0), Rat(1);
  RatMat verts = p.vertices() * t.transpose();
  // Rebuild facets: normals transform by the inverse transpose, offsets stay
  // 1 because the origin is fixed.
  RatMat tinv = *inverse(t);
  RatMat normals = p.facet_normals() * tinv;
  Polytope sheared = Polytope::from_reps(PolytopeV{3, verts, "sheared"},
                                         PolytopeH{3, normals});
  CHECK(classify_3polytope(sheared).cls == ThreePolytopeClass::Bisimplex);
}
