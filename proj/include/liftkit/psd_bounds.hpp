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

#ifndef LIFTKIT_PSD_BOUNDS_HPP
#define LIFTKIT_PSD_BOUNDS_HPP

#include <optional>
#include <string>

#include "liftkit/polytope.hpp"
#include "liftkit/sqrt_rank.hpp"

namespace liftkit {

struct PolytopeContext {
  std::optional<int> n;  // ambient dimension
  std::optional<int> v;  // vertex count
  std::optional<int> f;  // facet count
  std::optional<double> algebraic_degree;  // of the polar boundary
};

struct PsdRankBoundReport {
  int matrix_rank = 0;
  int rank_formula_lb = 0;                  // ceil((sqrt(1+8r)-1)/2)
  std::optional<int> polytope_dim_lb;       // n+1
  std::optional<int> degree_lb;             // ceil(sqrt(log2 d))
  std::optional<int> dimension_lb;          // ceil((sqrt(1+8(n+1))-1)/2)
  std::optional<int> linear_ext_lb;         // ceil(log2 v); polyhedral lifts
  int upper_bound = 0;                      // min{v, f}
  std::optional<int> witness_upper;         // any verified factorization size
  std::string log_base = "2";
};

// Throws InconsistencyError when a recorded psd lower bound exceeds an upper
// bound. The linear extension bound is informational only (it limits
// polyhedral lifts, not psd rank).
PsdRankBoundReport psd_rank_bounds(
    const RatMat& m, const std::optional<PolytopeContext>& ctx = std::nullopt,
    std::optional<int> witness_upper = std::nullopt);

enum class MinimalityVerdict { Minimal, NotMinimal, Unknown };

const char* minimality_verdict_name(MinimalityVerdict v);

struct PsdMinimalityResult {
  MinimalityVerdict verdict = MinimalityVerdict::Unknown;
  std::optional<SqrtRankCertificate> certificate;
  std::optional<int> sqrt_rank_value;
  bool sqrt_scan_complete = false;
  std::string reason;
};

// Psd-minimality via the square-root rank characterization, with the
// trinomial obstruction short-circuit.
PsdMinimalityResult psd_minimality_test(const Polytope& p,
                                        const SearchBudget& budget = {});

}  // namespace liftkit

#endif  // LIFTKIT_PSD_BOUNDS_HPP
