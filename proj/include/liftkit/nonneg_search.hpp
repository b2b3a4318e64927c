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

#ifndef LIFTKIT_NONNEG_SEARCH_HPP
#define LIFTKIT_NONNEG_SEARCH_HPP

#include <optional>
#include <string>

#include "liftkit/factorization.hpp"
#include "liftkit/sqrt_rank.hpp"

namespace liftkit {

enum class SearchStatus { Found, Infeasible, Unknown };

const char* search_status_name(SearchStatus s);

// Audit trail for Infeasible-vs-Unknown verdicts.
struct EnumerationLog {
  long rectangles = 0;          // zero-free rectangles of the support
  long covers_examined = 0;     // irredundant rectangle covers solved
  long covers_refuted = 0;      // refuted by exact propagation
  long covers_undecided = 0;    // stalled patterns (block Infeasible)
  long smaller_covers = 0;      // covers with < k rectangles (block Infeasible)
  long nodes = 0;               // DFS nodes visited
  bool enumeration_complete = false;
  std::string note;
};

struct NonnegSearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<NonnegFactorization> factorization;
  EnumerationLog log;
};

// Searches for an exact R+^k-factorization of a nonnegative rational matrix.
// Candidate support patterns are the irredundant covers of the support by
// zero-free rectangles (a zero entry forces complementary supports); each
// cover pins a bilinear system that is solved exactly by propagation.
// Infeasible is returned only when the pattern enumeration completed, every
// cover was refuted, and no smaller cover exists (which rules out repeated
// or redundant factors); a budget cut degrades the verdict to Unknown.
NonnegSearchResult search_nonneg_factorization(const RatMat& m, int k,
                                               const SearchBudget& budget = {});

}  // namespace liftkit

#endif  // LIFTKIT_NONNEG_SEARCH_HPP
