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

#ifndef LIFTKIT_LINALG_HPP
#define LIFTKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "liftkit/rational.hpp"

namespace liftkit {

// Exact rank via rational Gaussian elimination; no floating point.
int rank_exact(const RatMat& m);

// Reduced row echelon form; pivot column indices returned in order.
struct Rref {
  RatMat mat;
  std::vector<int> pivots;
};
Rref rref(const RatMat& m);

// Columns form a basis of {x : m x = 0}.
RatMat nullspace(const RatMat& m);

// Rows form a basis of {y : y' m = 0}.
RatMat left_nullspace(const RatMat& m);

// Any solution of m x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const RatMat& m, const RatVec& b);

// Inverse of a square nonsingular matrix; nullopt if singular.
std::optional<RatMat> inverse(const RatMat& m);

// x minimizing nothing in particular: exact solve of the normal equations
// (m'm) x = m'b for full-column-rank m. Solves consistent overdetermined
// systems exactly.
RatVec solve_normal_equations(const RatMat& m, const RatVec& b);

// Equality systems {x : A x = b} compared as affine sets.
bool affine_sets_equal(const RatMat& a1, const RatVec& b1, const RatMat& a2,
                       const RatVec& b2);

// Canonical presentation of {x : A x = b}: RREF of [A | b] with zero rows
// dropped. Returns nullopt when the system is inconsistent.
struct AffineSystem {
  RatMat coeffs;
  RatVec rhs;
};
std::optional<AffineSystem> canonical_affine(const RatMat& a, const RatVec& b);

}  // namespace liftkit

#endif  // LIFTKIT_LINALG_HPP
