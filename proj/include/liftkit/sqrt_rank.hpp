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

#ifndef LIFTKIT_SQRT_RANK_HPP
#define LIFTKIT_SQRT_RANK_HPP

#include <optional>

#include "liftkit/factorization.hpp"
#include "liftkit/rational.hpp"

namespace liftkit {

struct SearchBudget {
  long max_patterns = 2000000;
  long max_iterations = 2000;
  double time_cap_seconds = 300.0;
};

struct SqrtRankCertificate {
  Eigen::MatrixXi sign_matrix;   // +-1 on support cells, 0 elsewhere
  Eigen::MatrixXd sqrt_matrix;   // numeric view of the signed square root
  int achieved_rank = 0;
  bool exact = true;  // rank certified over a quadratic tower
};

struct SqrtRankResult {
  bool complete = false;  // enumeration finished: value is the exact minimum
  int rank = 0;           // minimum found (upper bound when !complete)
  SqrtRankCertificate certificate;
  long patterns_tried = 0;
  bool exact_arithmetic = true;  // false: numeric ranks with tolerance
};

// Minimum rank of a Hadamard square root over all sign choices. Row/column
// negations preserve rank, so signs on a spanning forest of the support's
// bipartite graph are pinned to +1 and only the complementary cells are
// enumerated. Exact tower arithmetic whenever every entry's square root
// lives in a manageable quadratic tower; numeric ranks otherwise (flagged).
SqrtRankResult sqrt_rank(const RatMat& m, const SearchBudget& budget = {});

// Rank-one psd factorization built from a certificate: factors a_i a_i',
// b_j b_j' from a rank factorization of the signed square root.
PsdFactorization psd_from_sqrt(const RatMat& m,
                               const SqrtRankCertificate& cert);

}  // namespace liftkit

#endif  // LIFTKIT_SQRT_RANK_HPP
