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

#include "liftkit/simplex.hpp"

#include "liftkit/error.hpp"
#include "liftkit/linalg.hpp"

namespace liftkit {

const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

struct Tableau {
  RatMat t;                // m x (ncols+1); last column is the rhs
  std::vector<int> basis;  // basic column per row
};

void pivot(Tableau& tab, int row, int col) {
  tab.t.row(row) /= tab.t(row, col);
  for (Eigen::Index i = 0; i < tab.t.rows(); ++i) {
    if (i == row || tab.t(i, col) == 0) continue;
    tab.t.row(i) -= tab.t(i, col) * tab.t.row(row);
  }
  tab.basis[row] = col;
}

// Bland's rule primal simplex on the current basis; cost restricted to the
// first `ncols` columns. Returns false when unbounded.
bool run(Tableau& tab, const RatVec& cost, int ncols) {
  const int m = static_cast<int>(tab.t.rows());
  for (;;) {
    // Reduced costs r_j = c_j - c_B' T_j.
    int entering = -1;
    for (int j = 0; j < ncols; ++j) {
      Rat rj = cost(j);
      for (int i = 0; i < m; ++i) {
        if (tab.t(i, j) == 0) continue;
        rj -= cost(tab.basis[i]) * tab.t(i, j);
      }
      if (rj < 0) {
        entering = j;
        break;  // smallest index first
      }
    }
    if (entering < 0) return true;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (tab.t(i, entering) <= 0) continue;
      Rat ratio = tab.t(i, tab.t.cols() - 1) / tab.t(i, entering);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;
    pivot(tab, leave, entering);
  }
}

}  // namespace

LpSolution simplex_solve(const LpProblem& prob) {
  const int m = static_cast<int>(prob.a.rows());
  const int n = static_cast<int>(prob.a.cols());
  if (prob.b.size() != m || prob.c.size() != n)
    throw Error(Errc::ShapeMismatch, "LP data shapes disagree");

  RatVec c = prob.maximize ? RatVec(-prob.c) : prob.c;

  // Phase 1 tableau: [A | I | b] with b >= 0 after row sign flips.
  Tableau tab;
  tab.t = RatMat::Zero(m, n + m + 1);
  tab.t.topLeftCorner(m, n) = prob.a;
  tab.t.col(n + m) = prob.b;
  for (int i = 0; i < m; ++i) {
    if (tab.t(i, n + m) < 0) tab.t.row(i) = -tab.t.row(i);
    tab.t(i, n + i) = 1;
    tab.basis.push_back(n + i);
  }

  RatVec phase1 = RatVec::Zero(n + m);
  for (int i = 0; i < m; ++i) phase1(n + i) = 1;
  if (!run(tab, phase1, n + m))
    throw Error(Errc::SolverFailure, "phase-1 unbounded");  // unreachable
  Rat art_sum = 0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) art_sum += tab.t(i, n + m);
  LpSolution sol;
  if (art_sum > 0) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  // Drive zero-level artificials out where a structural pivot exists.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (tab.t(i, j) != 0) {
        pivot(tab, i, j);
        break;
      }
  }

  // Phase 2: artificials keep zero cost and never re-enter (cost loop is
  // restricted to structural columns, and basic zero-level artificials are
  // harmless degenerate rows).
  RatVec phase2 = RatVec::Zero(n + m);
  phase2.head(n) = c;
  if (!run(tab, phase2, n)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x = RatVec::Zero(n);
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) sol.x(tab.basis[i]) = tab.t(i, n + m);
  sol.objective = 0;
  for (int j = 0; j < n; ++j) sol.objective += prob.c(j) * sol.x(j);

  // Duals: y' = c_B' B^{-1}; the artificial columns of the tableau hold
  // B^{-1} for the original row order (up to the sign flips applied above).
  sol.y = RatVec::Zero(m);
  for (int i = 0; i < m; ++i) {
    Rat yi = 0;
    for (int r = 0; r < m; ++r) yi += phase2(tab.basis[r]) * tab.t(r, n + i);
    // Undo the phase-1 row sign flip.
    if (prob.b(i) < 0) yi = -yi;
    sol.y(i) = prob.maximize ? Rat(-yi) : yi;
  }
  return sol;
}

LpOutcome solve_lp(const SdpProblem& prob, bool exact, const SdpOptions& opts) {
  const int n = static_cast<int>(prob.block_sizes.size());
  for (int s : prob.block_sizes)
    if (s != 1)
      throw Error(Errc::ShapeMismatch, "solve_lp expects 1x1 blocks only");
  const int m = static_cast<int>(prob.constraints.size());

  LpOutcome out;
  if (exact) {
    LpProblem lp;
    lp.a = RatMat::Zero(m, n);
    lp.b = RatVec::Zero(m);
    lp.c = RatVec::Zero(n);
    lp.maximize = prob.maximize;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j)
        lp.a(i, j) = rat_from_double_exact(prob.constraints[i].blocks[j](0, 0));
      lp.b(i) = rat_from_double_exact(prob.rhs(i));
    }
    for (int j = 0; j < n; ++j)
      lp.c(j) = rat_from_double_exact(prob.objective.blocks[j](0, 0));
    LpSolution ls = simplex_solve(lp);
    out.exact = true;
    out.solution.status = ls.status == LpStatus::Optimal ? SdpStatus::Optimal
                          : ls.status == LpStatus::Infeasible
                              ? SdpStatus::Infeasible
                              : SdpStatus::Unbounded;
    if (ls.status == LpStatus::Optimal) {
      out.exact_objective = ls.objective;
      out.exact_x = ls.x;
      out.solution.x = BlockMatrix::zero(prob.block_sizes);
      for (int j = 0; j < n; ++j)
        out.solution.x.blocks[j](0, 0) = to_double(ls.x(j));
      out.solution.y.resize(m);
      for (int i = 0; i < m; ++i) out.solution.y(i) = to_double(ls.y(i));
      out.solution.primal_obj = out.solution.dual_obj =
          to_double(ls.objective);
      out.solution.duality_gap = 0;
    }
    return out;
  }

  // LP agreement with exact mode is contractual at 1e-6; tighten the cheap
  // interior point solve well below that.
  SdpOptions tight = opts;
  tight.tol = std::min(tight.tol, 1e-9);
  tight.gap_tol = std::min(tight.gap_tol, 1e-9);
  out.solution = solve_sdp(prob, tight);
  if (out.solution.status == SdpStatus::MaxIter) {
    // Certify the status exactly rather than reporting a stall.
    LpOutcome certified = solve_lp(prob, true, opts);
    certified.exact = false;
    return certified;
  }
  return out;
}

}  // namespace liftkit
