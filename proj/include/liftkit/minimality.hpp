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

#ifndef LIFTKIT_MINIMALITY_HPP
#define LIFTKIT_MINIMALITY_HPP

#include <optional>
#include <vector>

#include "liftkit/polytope.hpp"

namespace liftkit {

// Number of permutations of a square 0/1 pattern with all-nonzero diagonal
// product, i.e. the permanent. With distinct variables per support cell this
// equals the monomial count of the symbolic determinant.
long support_permanent_count(const Eigen::MatrixXi& pattern);

// Same count but stops once it exceeds `cap` (returns cap+1 then).
long support_permanent_count_capped(const Eigen::MatrixXi& pattern, long cap);

struct MinorWitness {
  std::vector<int> rows, cols;  // the (n+2)-subsets
  long monomial_count = 0;
  std::vector<std::vector<int>> permutations;  // column index per row
};

struct TrinomialScan {
  std::optional<MinorWitness> witness;
  bool complete = true;  // full scan finished (no budget cut)
  long submatrices_scanned = 0;
};

// Scans (n+2)x(n+2) submatrices of the symbolic slack pattern in
// lexicographic (row-subset, col-subset) order for a trinomial minor.
TrinomialScan trinomial_obstruction(const SymbolicSlackPattern& s, int n,
                                    long max_submatrices = 2000000);

// Every facet direction takes at most two values on the vertex set.
bool two_level_test(const Polytope& p);

enum class ThreePolytopeClass {
  Simplex,
  QuadPyramid,
  Bisimplex,
  Octahedron,
  DualOfAbove,
  NotMinimalClass,
};

const char* three_class_name(ThreePolytopeClass c);

struct Classification3 {
  ThreePolytopeClass cls = ThreePolytopeClass::NotMinimalClass;
  std::optional<bool> biplanar;  // set for octahedra
  std::string detail;
};

// Combinatorial classification by vertex degrees and facet sizes; octahedra
// additionally get the exact biplanarity test. Throws WrongDimension.
Classification3 classify_3polytope(const Polytope& p);

// True iff at least two distinct planes each contain exactly four of the six
// vertices (exact rational coplanarity). Throws NotOctahedron.
bool biplanar_test(const Polytope& p);

}  // namespace liftkit

#endif  // LIFTKIT_MINIMALITY_HPP
