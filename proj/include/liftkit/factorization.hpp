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

#ifndef LIFTKIT_FACTORIZATION_HPP
#define LIFTKIT_FACTORIZATION_HPP

#include <vector>

#include "liftkit/rational.hpp"

namespace liftkit {

// M = A * B with A (v x k) and B (k x f) entrywise nonnegative; rows of A live
// in R+^k, columns of B in its dual.
struct NonnegFactorization {
  int k = 0;
  RatMat a;
  RatMat b;
};

// M_ij = trace(row_factors[i] * col_factors[j]) with every factor symmetric
// psd of size k. Factors are held as doubles; exact rational mirrors are kept
// when the source data was exact (used for exact slice constructions).
struct PsdFactorization {
  int k = 0;
  std::vector<Eigen::MatrixXd> row_factors;
  std::vector<Eigen::MatrixXd> col_factors;
  std::vector<RatMat> row_exact;  // empty when unavailable
  std::vector<RatMat> col_exact;

  bool has_exact() const {
    return !row_exact.empty() && !col_exact.empty();
  }
};

// Exact check: A B == m and all entries nonnegative.
bool verify_nonneg_factorization(const RatMat& m,
                                 const NonnegFactorization& fac);

// Float check with absolute tolerance.
bool verify_nonneg_factorization(const Eigen::MatrixXd& m,
                                 const NonnegFactorization& fac, double tol);

// Every factor symmetric (throws NonSymmetricFactor), psd within tol, and all
// trace pairings within tol of m.
bool verify_psd_factorization(const Eigen::MatrixXd& m,
                              const PsdFactorization& fac, double tol);
bool verify_psd_factorization(const RatMat& m, const PsdFactorization& fac,
                              double tol);

}  // namespace liftkit

#endif  // LIFTKIT_FACTORIZATION_HPP
