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

#include "liftkit/nonneg_search.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <functional>
#include <set>

#include "liftkit/error.hpp"

namespace liftkit {

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Infeasible: return "Infeasible";
    case SearchStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr int kMaxCells = 512;
using CellSet = std::bitset<kMaxCells>;

struct Rect {
  uint32_t rows = 0, cols = 0;
  CellSet cells;
  int area = 0;
};

struct Clock {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double cap;
  explicit Clock(double seconds) : cap(seconds) {}
  bool expired() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
               .count() > cap;
  }
};

// All (I, J) with I x J inside the support. Returns false when the count
// exceeds the cap.
bool enumerate_rectangles(const std::vector<uint32_t>& row_support, int v,
                          int f, long cap, std::vector<Rect>& out) {
  auto subsets_of = [](uint32_t mask, auto&& fn) {
    // iterate nonempty submasks
    for (uint32_t s = mask; s; s = (s - 1) & mask) fn(s);
  };
  for (uint32_t rows = 1; rows < (1u << v); ++rows) {
    uint32_t allowed = (1u << f) - 1;
    for (int i = 0; i < v && allowed; ++i)
      if (rows >> i & 1) allowed &= row_support[i];
    if (!allowed) continue;
    bool over = false;
    subsets_of(allowed, [&](uint32_t cols) {
      if (over) return;
      if (static_cast<long>(out.size()) >= cap) {
        over = true;
        return;
      }
      Rect r;
      r.rows = rows;
      r.cols = cols;
      for (int i = 0; i < v; ++i)
        if (rows >> i & 1)
          for (int j = 0; j < f; ++j)
            if (cols >> j & 1) {
              r.cells.set(i * f + j);
              ++r.area;
            }
      out.push_back(std::move(r));
    });
    if (over) return false;
  }
  // Deterministic order: by row mask, then col mask.
  std::sort(out.begin(), out.end(), [](const Rect& a, const Rect& b) {
    return a.rows != b.rows ? a.rows < b.rows : a.cols < b.cols;
  });
  return true;
}

// Exact solve of the bilinear system pinned by a cover. Values inside each
// rectangle are determined up to a per-rectangle scaling gauge, so the first
// row value of every rectangle is fixed to 1 and the rest propagates through
// cells whose other terms are known.
enum class PatternOutcome { Solved, Refuted, Stalled };

struct PatternSolution {
  // per rectangle: row values and column values on its index sets
  std::vector<std::vector<Rat>> row_vals, col_vals;
};

PatternOutcome solve_pattern(const RatMat& m, const std::vector<Rect>& rects,
                             const std::vector<int>& cover,
                             PatternSolution& sol) {
  const int f = static_cast<int>(m.cols());
  const int L = static_cast<int>(cover.size());

  struct Local {
    std::vector<int> rows, cols;       // index sets
    std::vector<Rat> rv, cv;           // values
    std::vector<char> rknown, cknown;  // flags
  };
  std::vector<Local> loc(L);
  for (int l = 0; l < L; ++l) {
    const Rect& r = rects[cover[l]];
    for (int i = 0; i < 32; ++i)
      if (r.rows >> i & 1) loc[l].rows.push_back(i);
    for (int j = 0; j < 32; ++j)
      if (r.cols >> j & 1) loc[l].cols.push_back(j);
    loc[l].rv.assign(loc[l].rows.size(), Rat(0));
    loc[l].cv.assign(loc[l].cols.size(), Rat(0));
    loc[l].rknown.assign(loc[l].rows.size(), 0);
    loc[l].cknown.assign(loc[l].cols.size(), 0);
    loc[l].rv[0] = 1;  // gauge
    loc[l].rknown[0] = 1;
  }

  auto rpos = [&](int l, int i) {
    const auto& v = loc[l].rows;
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), i) -
                            v.begin());
  };
  auto cpos = [&](int l, int j) {
    const auto& v = loc[l].cols;
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), j) -
                            v.begin());
  };

  // Cells with their covering rectangles.
  struct Cell {
    int i, j;
    std::vector<int> terms;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < f; ++j) {
      if (m(i, j) == 0) continue;
      Cell c{i, j, {}};
      for (int l = 0; l < L; ++l)
        if ((rects[cover[l]].rows >> i & 1) && (rects[cover[l]].cols >> j & 1))
          c.terms.push_back(l);
      cells.push_back(std::move(c));
    }

  bool progress = true;
  while (progress) {
    progress = false;
    for (const Cell& c : cells) {
      // Classify terms.
      Rat known_sum(0);
      int open_term = -1, open_count = 0;
      for (int l : c.terms) {
        int ri = rpos(l, c.i), ci = cpos(l, c.j);
        bool rk = loc[l].rknown[ri], ck = loc[l].cknown[ci];
        if (rk && ck) {
          known_sum += loc[l].rv[ri] * loc[l].cv[ci];
        } else if (rk != ck) {
          ++open_count;
          open_term = l;
        } else {
          open_count += 2;  // both factors unknown: cannot resolve here
        }
      }
      if (open_count == 0) {
        if (known_sum != m(c.i, c.j)) return PatternOutcome::Refuted;
        continue;
      }
      if (open_count == 1) {
        int l = open_term;
        int ri = rpos(l, c.i), ci = cpos(l, c.j);
        Rat need = m(c.i, c.j) - known_sum;
        if (loc[l].rknown[ri]) {
          if (loc[l].rv[ri] == 0) return PatternOutcome::Refuted;
          Rat val = need / loc[l].rv[ri];
          if (val <= 0) return PatternOutcome::Refuted;
          loc[l].cv[ci] = val;
          loc[l].cknown[ci] = 1;
        } else {
          if (loc[l].cv[ci] == 0) return PatternOutcome::Refuted;
          Rat val = need / loc[l].cv[ci];
          if (val <= 0) return PatternOutcome::Refuted;
          loc[l].rv[ri] = val;
          loc[l].rknown[ri] = 1;
        }
        progress = true;
      }
    }
  }

  for (int l = 0; l < L; ++l) {
    for (char k : loc[l].rknown)
      if (!k) return PatternOutcome::Stalled;
    for (char k : loc[l].cknown)
      if (!k) return PatternOutcome::Stalled;
  }
  // Everything known: final consistency sweep.
  for (const Cell& c : cells) {
    Rat sum(0);
    for (int l : c.terms)
      sum += loc[l].rv[rpos(l, c.i)] * loc[l].cv[cpos(l, c.j)];
    if (sum != m(c.i, c.j)) return PatternOutcome::Refuted;
  }
  sol.row_vals.clear();
  sol.col_vals.clear();
  for (int l = 0; l < L; ++l) {
    sol.row_vals.push_back(loc[l].rv);
    sol.col_vals.push_back(loc[l].cv);
  }
  return PatternOutcome::Solved;
}

NonnegFactorization assemble(const RatMat& m, const std::vector<Rect>& rects,
                             const std::vector<int>& cover,
                             const PatternSolution& sol, int k) {
  NonnegFactorization fac;
  fac.k = k;
  fac.a = RatMat::Zero(m.rows(), k);
  fac.b = RatMat::Zero(k, m.cols());
  for (size_t l = 0; l < cover.size(); ++l) {
    const Rect& r = rects[cover[l]];
    int ri = 0;
    for (int i = 0; i < 32; ++i)
      if (r.rows >> i & 1) fac.a(i, static_cast<int>(l)) = sol.row_vals[l][ri++];
    int ci = 0;
    for (int j = 0; j < 32; ++j)
      if (r.cols >> j & 1) fac.b(static_cast<int>(l), j) = sol.col_vals[l][ci++];
  }
  return fac;
}

// Masked alternating least squares with exact rational rounding; a success
// path only, used when propagation stalls.
std::optional<NonnegFactorization> anls_attempt(const RatMat& m,
                                                const std::vector<Rect>& rects,
                                                const std::vector<int>& cover,
                                                int k, long iterations) {
  const int v = static_cast<int>(m.rows());
  const int f = static_cast<int>(m.cols());
  const int L = static_cast<int>(cover.size());
  Eigen::MatrixXd md = to_double_matrix(m);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, L), b = Eigen::MatrixXd::Zero(L, f);
  // Deterministic seeded start.
  unsigned state = 12345;
  for (int l = 0; l < L; ++l) {
    const Rect& r = rects[cover[l]];
    for (int i = 0; i < v; ++i)
      if (r.rows >> i & 1) {
        state = state * 1664525u + 1013904223u;
        a(i, l) = 0.5 + (state >> 16) / 131072.0;
      }
    for (int j = 0; j < f; ++j)
      if (r.cols >> j & 1) {
        state = state * 1664525u + 1013904223u;
        b(l, j) = 0.5 + (state >> 16) / 131072.0;
      }
  }
  const double eps = 1e-12;
  for (long it = 0; it < iterations; ++it) {
    // Multiplicative updates restricted to the masks.
    Eigen::MatrixXd num_b = a.transpose() * md;
    Eigen::MatrixXd den_b = a.transpose() * a * b;
    for (int l = 0; l < L; ++l)
      for (int j = 0; j < f; ++j)
        if (b(l, j) > 0) b(l, j) *= num_b(l, j) / std::max(den_b(l, j), eps);
    Eigen::MatrixXd num_a = md * b.transpose();
    Eigen::MatrixXd den_a = a * b * b.transpose();
    for (int i = 0; i < v; ++i)
      for (int l = 0; l < L; ++l)
        if (a(i, l) > 0) a(i, l) *= num_a(i, l) / std::max(den_a(i, l), eps);
    if (it % 50 == 49 && (a * b - md).cwiseAbs().maxCoeff() < 1e-11) break;
  }
  if ((a * b - md).cwiseAbs().maxCoeff() > 1e-9) return std::nullopt;
  NonnegFactorization fac;
  fac.k = k;
  fac.a = RatMat::Zero(v, k);
  fac.b = RatMat::Zero(k, f);
  for (int l = 0; l < L; ++l) {
    for (int i = 0; i < v; ++i) fac.a(i, l) = rat_round(a(i, l), 100000);
    for (int j = 0; j < f; ++j) fac.b(l, j) = rat_round(b(l, j), 100000);
  }
  if (verify_nonneg_factorization(m, fac)) return fac;
  return std::nullopt;
}

}  // namespace

NonnegSearchResult search_nonneg_factorization(const RatMat& m, int k,
                                               const SearchBudget& budget) {
  const int v = static_cast<int>(m.rows());
  const int f = static_cast<int>(m.cols());
  if (k < 1) throw Error(Errc::ShapeMismatch, "k must be at least 1");
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      if (m(i, j) < 0)
        throw Error(Errc::ShapeMismatch, "matrix must be nonnegative");

  NonnegSearchResult res;
  Clock clock(budget.time_cap_seconds);

  bool all_zero = true;
  for (int i = 0; i < v && all_zero; ++i)
    for (int j = 0; j < f; ++j)
      if (m(i, j) != 0) {
        all_zero = false;
        break;
      }
  if (all_zero) {
    res.status = SearchStatus::Found;
    res.factorization = NonnegFactorization{k, RatMat::Zero(v, k),
                                            RatMat::Zero(k, f)};
    res.log.enumeration_complete = true;
    res.log.note = "zero matrix";
    return res;
  }

  if (k >= std::min(v, f)) {
    // Trivial factorization through the smaller side.
    NonnegFactorization fac;
    fac.k = k;
    fac.a = RatMat::Zero(v, k);
    fac.b = RatMat::Zero(k, f);
    if (v <= f) {
      fac.a.leftCols(v) = RatMat::Identity(v, v);
      fac.b.topRows(v) = m;
    } else {
      fac.a.leftCols(f) = m;
      fac.b.topRows(f) = RatMat::Identity(f, f);
    }
    res.status = SearchStatus::Found;
    res.factorization = fac;
    res.log.enumeration_complete = true;
    res.log.note = "k >= min(v, f): trivial factorization";
    return res;
  }

  if (v > 20 || f > 20 || v * f > kMaxCells) {
    res.log.note = "matrix too large for pattern enumeration";
    return res;  // Unknown
  }

  std::vector<uint32_t> row_support(v, 0);
  CellSet support;
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      if (m(i, j) != 0) {
        row_support[i] |= 1u << j;
        support.set(i * f + j);
      }

  std::vector<Rect> rects;
  if (!enumerate_rectangles(row_support, v, f, budget.max_patterns, rects)) {
    res.log.note = "rectangle enumeration exceeded budget";
    return res;  // Unknown
  }
  res.log.rectangles = static_cast<long>(rects.size());

  // Zero rows of a zero-free rectangle never touch zero entries of m, so a
  // factorization's support rectangles cover every support cell and avoid
  // every zero. Irredundant covers by at most k rectangles are enumerated
  // with include/exclude branching on a fail-first cell, which visits every
  // cover exactly once.
  std::vector<std::vector<int>> covers;
  bool complete = true;
  std::vector<int> chosen;
  std::vector<char> banned(rects.size(), 0);
  int max_area = 0;
  for (const Rect& r : rects) max_area = std::max(max_area, r.area);

  std::vector<std::vector<int>> by_cell(static_cast<size_t>(v) * f);
  for (size_t r = 0; r < rects.size(); ++r)
    for (int c = 0; c < v * f; ++c)
      if (rects[r].cells.test(c)) by_cell[c].push_back(static_cast<int>(r));

  std::function<void(const CellSet&, int)> dfs = [&](const CellSet& covered,
                                                     int depth) {
    if (!complete) return;
    if (++res.log.nodes > budget.max_patterns || clock.expired()) {
      complete = false;
      return;
    }
    CellSet missing = support & ~covered;
    if (missing.none()) {
      std::vector<int> key = chosen;
      std::sort(key.begin(), key.end());
      covers.push_back(std::move(key));
      return;
    }
    if (depth == k) return;
    if (static_cast<long>(k - depth) * max_area <
        static_cast<long>(missing.count()))
      return;
    // Fail-first: branch on the missing cell with the fewest usable
    // rectangles.
    int cell = -1;
    size_t best = SIZE_MAX;
    for (int c = 0; c < v * f; ++c) {
      if (!missing.test(c)) continue;
      size_t usable = 0;
      for (int r : by_cell[c])
        if (!banned[r]) ++usable;
      if (usable < best) {
        best = usable;
        cell = c;
        if (best == 0) break;
      }
    }
    if (best == 0) return;
    std::vector<int> toggled;
    for (int r : by_cell[cell]) {
      if (banned[r]) continue;
      chosen.push_back(r);
      dfs(covered | rects[r].cells, depth + 1);
      chosen.pop_back();
      if (!complete) break;
      banned[r] = 1;
      toggled.push_back(r);
    }
    for (int r : toggled) banned[r] = 0;
  };
  dfs(CellSet{}, 0);
  res.log.enumeration_complete = complete;

  // Deterministic order: by size, then lexicographic ids.
  std::sort(covers.begin(), covers.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  for (const auto& cover : covers) {
    if (static_cast<int>(cover.size()) < k) ++res.log.smaller_covers;
    ++res.log.covers_examined;
    PatternSolution sol;
    PatternOutcome outcome = solve_pattern(m, rects, cover, sol);
    if (outcome == PatternOutcome::Solved) {
      NonnegFactorization fac = assemble(m, rects, cover, sol, k);
      if (verify_nonneg_factorization(m, fac)) {
        res.status = SearchStatus::Found;
        res.factorization = fac;
        return res;
      }
      ++res.log.covers_undecided;  // should not happen; stay sound
    } else if (outcome == PatternOutcome::Refuted) {
      ++res.log.covers_refuted;
    } else {
      auto fac = anls_attempt(m, rects, cover, k, budget.max_iterations);
      if (fac) {
        res.status = SearchStatus::Found;
        res.factorization = *fac;
        return res;
      }
      ++res.log.covers_undecided;
    }
    if (clock.expired()) {
      res.log.enumeration_complete = false;
      res.log.note = "time cap reached while solving patterns";
      return res;  // Unknown
    }
  }

  if (res.log.enumeration_complete && res.log.covers_undecided == 0 &&
      res.log.smaller_covers == 0) {
    // No pattern feasible, and no sub-cover exists through which a repeated
    // or redundant factor could slip by.
    res.status = SearchStatus::Infeasible;
    res.log.note = covers.empty() ? "support admits no cover by k zero-free "
                                    "rectangles"
                                  : "all support patterns refuted exactly";
  } else if (res.log.enumeration_complete && res.log.smaller_covers > 0) {
    res.log.note =
        "covers with fewer than k rectangles exist; multiplicity patterns "
        "not excluded";
  }
  return res;
}

}  // namespace liftkit
