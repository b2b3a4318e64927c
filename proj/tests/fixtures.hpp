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

#ifndef LIFTKIT_TESTS_FIXTURES_HPP
#define LIFTKIT_TESTS_FIXTURES_HPP

#include "liftkit/factorization.hpp"
#include "liftkit/polytope.hpp"

namespace liftkit::fixtures {

// Hexagon slack matrix, first row (0,0,1,2,2,1).
inline RatMat hexagon_slack() {
  RatMat s(6, 6);
  s << Rat(0), Rat(0), Rat(1), Rat(2), Rat(2), Rat(1),
       Rat(1), Rat(0), Rat(0), Rat(1), Rat(2), Rat(2),
       Rat(2), Rat(1), Rat(0), Rat(0), Rat(1), Rat(2),
       Rat(2), Rat(2), Rat(1), Rat(0), Rat(0), Rat(1),
       Rat(1), Rat(2), Rat(2), Rat(1), Rat(0), Rat(0),
       Rat(0), Rat(1), Rat(2), Rat(2), Rat(1), Rat(0);
  return s;
}

// The 6x5 / 5x6 nonnegative pair that factors the hexagon slack matrix.
inline NonnegFactorization hexagon_nonneg_factorization() {
  NonnegFactorization fac;
  fac.k = 5;
  fac.a = RatMat(6, 5);
  fac.a << Rat(1), Rat(0), Rat(1), Rat(0), Rat(0),
           Rat(1), Rat(0), Rat(0), Rat(0), Rat(1),
           Rat(0), Rat(0), Rat(0), Rat(1), Rat(2),
           Rat(0), Rat(1), Rat(0), Rat(0), Rat(1),
           Rat(0), Rat(1), Rat(1), Rat(0), Rat(0),
           Rat(0), Rat(0), Rat(2), Rat(1), Rat(0);
  fac.b = RatMat(5, 6);
  fac.b << Rat(0), Rat(0), Rat(0), Rat(1), Rat(2), Rat(1),
           Rat(1), Rat(2), Rat(1), Rat(0), Rat(0), Rat(0),
           Rat(0), Rat(0), Rat(1), Rat(1), Rat(0), Rat(0),
           Rat(0), Rat(1), Rat(0), Rat(0), Rat(1), Rat(0),
           Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1);
  return fac;
}

// Irregular hexagon slack data as printed (rows indexed by edges).
inline RatMat irregular_hexagon_matrix() {
  RatMat s(6, 6);
  s << Rat(0), Rat(0), Rat(1), Rat(4), Rat(3), Rat(1),
       Rat(1), Rat(0), Rat(0), Rat(4), Rat(4), Rat(3),
       Rat(7), Rat(4), Rat(0), Rat(0), Rat(4), Rat(9),
       Rat(3), Rat(4), Rat(4), Rat(0), Rat(0), Rat(1),
       Rat(3), Rat(5), Rat(6), Rat(1), Rat(0), Rat(0),
       Rat(0), Rat(1), Rat(3), Rat(5), Rat(3), Rat(0);
  return s;
}

// Square slack matrix in the column scaling whose entries are 0/1; rows
// (1,1), (1,-1), (-1,-1), (-1,1), facets 1-x1, 1-x2, 1+x1, 1+x2.
inline RatMat square_slack_01() {
  RatMat s(4, 4);
  s << Rat(0), Rat(0), Rat(1), Rat(1),
       Rat(0), Rat(1), Rat(1), Rat(0),
       Rat(1), Rat(1), Rat(0), Rat(0),
       Rat(1), Rat(0), Rat(0), Rat(1);
  return s;
}

// The size-3 psd factorization of the 0/1 square slack matrix: four
// rank-one row factors and four scaled projectors as column factors.
inline PsdFactorization square_psd_factorization() {
  PsdFactorization fac;
  fac.k = 3;
  auto push = [&](std::vector<RatMat>& dst, std::initializer_list<int> vals,
                  const Rat& scale) {
    RatMat m(3, 3);
    int idx = 0;
    for (int v : vals) {
      m(idx / 3, idx % 3) = Rat(v) * scale;
      ++idx;
    }
    dst.push_back(m);
  };
  push(fac.row_exact, {1, 1, 1, 1, 1, 1, 1, 1, 1}, Rat(1));
  push(fac.row_exact, {1, 1, -1, 1, 1, -1, -1, -1, 1}, Rat(1));
  push(fac.row_exact, {1, -1, -1, -1, 1, 1, -1, 1, 1}, Rat(1));
  push(fac.row_exact, {1, -1, 1, -1, 1, -1, 1, -1, 1}, Rat(1));
  push(fac.col_exact, {1, -1, 0, -1, 1, 0, 0, 0, 0}, Rat(1, 4));
  push(fac.col_exact, {1, 0, -1, 0, 0, 0, -1, 0, 1}, Rat(1, 4));
  push(fac.col_exact, {1, 1, 0, 1, 1, 0, 0, 0, 0}, Rat(1, 4));
  push(fac.col_exact, {1, 0, 1, 0, 0, 0, 1, 0, 1}, Rat(1, 4));
  for (const auto& m : fac.row_exact)
    fac.row_factors.push_back(to_double_matrix(m));
  for (const auto& m : fac.col_exact)
    fac.col_factors.push_back(to_double_matrix(m));
  return fac;
}

// Paper-ordered square with vertices (+-1, +-1); exact slacks are twice the
// 0/1 matrix.
inline Polytope paper_square() {
  RatMat verts(4, 2);
  verts << Rat(1), Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(1);
  RatMat normals(4, 2);
  normals << Rat(1), Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0), Rat(0), Rat(-1);
  return Polytope::from_reps(PolytopeV{2, verts, "square"},
                             PolytopeH{2, normals});
}

// Same psd factorization rescaled to the exact (0/2) square slack matrix:
// column factors double.
inline PsdFactorization square_psd_factorization_scaled() {
  PsdFactorization fac = square_psd_factorization();
  for (auto& m : fac.col_exact) m *= Rat(2);
  for (auto& m : fac.col_factors) m *= 2.0;
  return fac;
}

}  // namespace liftkit::fixtures

#endif  // LIFTKIT_TESTS_FIXTURES_HPP
