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

#ifndef LIFTKIT_SIMPLEX_HPP
#define LIFTKIT_SIMPLEX_HPP

#include "liftkit/rational.hpp"
#include "liftkit/sdp.hpp"

namespace liftkit {

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* lp_status_name(LpStatus s);

// optimize c'x subject to a x = b, x >= 0, over exact rationals.
struct LpProblem {
  RatMat a;
  RatVec b;
  RatVec c;
  bool maximize = false;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVec x;
  RatVec y;  // equality duals: min sense A' y <= c binding on the basis
  Rat objective = 0;
};

// Two-phase primal simplex with Bland's rule; deterministic and exact.
LpSolution simplex_solve(const LpProblem& prob);

// Spec-shaped entry point: an LP posed as a diagonal SdpProblem. Exact mode
// runs the rational simplex on the exactly-converted data; float mode
// delegates to the interior point solver (with an exact fallback when the
// iteration stalls, so status semantics stay contractual).
struct LpOutcome {
  SdpSolution solution;
  bool exact = false;
  Rat exact_objective = 0;
  RatVec exact_x;
};
LpOutcome solve_lp(const SdpProblem& prob, bool exact,
                   const SdpOptions& opts = {});

}  // namespace liftkit

#endif  // LIFTKIT_SIMPLEX_HPP
