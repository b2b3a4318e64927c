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

#include "liftkit/psd_bounds.hpp"

#include <cmath>

#include "liftkit/minimality.hpp"

namespace liftkit {

namespace {

// Smallest k with k(k+1)/2 >= r, the integer form of (sqrt(1+8r)-1)/2
// rounded up.
int triangular_inverse_ceil(int r) {
  int k = 0;
  while (k * (k + 1) / 2 < r) ++k;
  return k;
}

// ceil(sqrt(log2(d))) with an epsilon guard against exact powers.
int degree_bound(double d) {
  double l = std::log2(d);
  int k = static_cast<int>(std::ceil(std::sqrt(l) - 1e-12));
  return std::max(k, 0);
}

}  // namespace

PsdRankBoundReport psd_rank_bounds(const RatMat& m,
                                   const std::optional<PolytopeContext>& ctx,
                                   std::optional<int> witness_upper) {
  PsdRankBoundReport rep;
  rep.matrix_rank = rank_exact(m);
  rep.rank_formula_lb = triangular_inverse_ceil(rep.matrix_rank);
  rep.upper_bound =
      static_cast<int>(std::min(m.rows(), m.cols()));
  rep.witness_upper = witness_upper;
  if (ctx) {
    if (ctx->n) {
      rep.polytope_dim_lb = *ctx->n + 1;
      rep.dimension_lb = triangular_inverse_ceil(*ctx->n + 1);
    }
    if (ctx->algebraic_degree && *ctx->algebraic_degree >= 1)
      rep.degree_lb = degree_bound(*ctx->algebraic_degree);
    if (ctx->v && *ctx->v >= 1)
      rep.linear_ext_lb = static_cast<int>(
          std::ceil(std::log2(static_cast<double>(*ctx->v)) - 1e-12));
  }

  int max_lb = rep.rank_formula_lb;
  if (rep.polytope_dim_lb) max_lb = std::max(max_lb, *rep.polytope_dim_lb);
  if (rep.degree_lb) max_lb = std::max(max_lb, *rep.degree_lb);
  if (rep.dimension_lb) max_lb = std::max(max_lb, *rep.dimension_lb);
  int min_ub = rep.upper_bound;
  if (rep.witness_upper) min_ub = std::min(min_ub, *rep.witness_upper);
  if (max_lb > min_ub)
    throw Error(Errc::InconsistencyError,
                "psd rank lower bound " + std::to_string(max_lb) +
                    " exceeds upper bound " + std::to_string(min_ub));
  return rep;
}

const char* minimality_verdict_name(MinimalityVerdict v) {
  switch (v) {
    case MinimalityVerdict::Minimal: return "Minimal";
    case MinimalityVerdict::NotMinimal: return "NotMinimal";
    case MinimalityVerdict::Unknown: return "Unknown";
  }
  return "?";
}

PsdMinimalityResult psd_minimality_test(const Polytope& p,
                                        const SearchBudget& budget) {
  PsdMinimalityResult res;
  SlackMatrix s = slack_matrix(p);
  const int target = p.dim() + 1;

  TrinomialScan scan = trinomial_obstruction(symbolic_pattern(s), p.dim());
  if (scan.witness) {
    res.verdict = MinimalityVerdict::NotMinimal;
    res.reason = "trinomial (n+2)-minor obstruction";
    return res;
  }

  SqrtRankResult sr = sqrt_rank(s.entries, budget);
  res.sqrt_scan_complete = sr.complete;
  res.sqrt_rank_value = sr.rank;
  if (sr.rank == target) {
    // An achieved root of rank n+1 settles it: sqrt rank is always >= psd
    // rank >= n+1.
    res.verdict = MinimalityVerdict::Minimal;
    res.certificate = sr.certificate;
    res.reason = "square root of rank n+1";
  } else if (sr.complete && sr.exact_arithmetic && sr.rank > target) {
    res.verdict = MinimalityVerdict::NotMinimal;
    res.reason = "exhaustive sign enumeration: sqrt rank " +
                 std::to_string(sr.rank) + " > " + std::to_string(target);
  } else {
    res.verdict = MinimalityVerdict::Unknown;
    res.reason = sr.complete ? "approximate arithmetic only"
                             : "sign enumeration budget exhausted";
  }
  return res;
}

}  // namespace liftkit
