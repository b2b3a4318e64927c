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

#include "liftkit/lifts.hpp"

#include <algorithm>

namespace liftkit {

namespace {

// Exact pseudoinverse (F'F)^-1 F' for full-column-rank F.
RatMat pseudo_inverse(const RatMat& f) {
  auto inv = inverse(RatMat(f.transpose() * f));
  if (!inv)
    throw Error(Errc::ProjectionIllDefined,
                "facet normals do not span the space");
  return *inv * f.transpose();
}

// Rational parametrization of {Z symmetric : <E_m, Z> = b_m} as
// Z = Z0 + sum_t w_t D_t. Returns false when the system is inconsistent.
struct SymSlice {
  RatMat z0;
  std::vector<RatMat> basis;
};

bool parametrize_sym_slice(int k, const std::vector<RatMat>& eq_mats,
                           const RatVec& eq_b, SymSlice& out) {
  const int svec = k * (k + 1) / 2;
  const int m = static_cast<int>(eq_mats.size());
  RatMat a = RatMat::Zero(m, svec);
  for (int r = 0; r < m; ++r) {
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        a(r, idx) = (i == j) ? eq_mats[r](i, j)
                             : eq_mats[r](i, j) + eq_mats[r](j, i);
        ++idx;
      }
  }
  auto part = solve_linear(a, eq_b);
  if (!part) return false;
  auto unpack = [&](const RatVec& v) {
    RatMat z = RatMat::Zero(k, k);
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        z(i, j) = v(idx);
        z(j, i) = v(idx);
        ++idx;
      }
    return z;
  };
  out.z0 = unpack(*part);
  RatMat ns = nullspace(a);
  out.basis.clear();
  for (int t = 0; t < ns.cols(); ++t) out.basis.push_back(unpack(ns.col(t)));
  return true;
}

Eigen::MatrixXd sym_to_double(const RatMat& m) { return to_double_matrix(m); }

// LMI data for max <obj, Z> over {Z >= 0 : slice}; an optional extra
// variable t with coefficient -I turns it into a minimum-eigenvalue
// maximization.
struct SliceLmi {
  BlockMatrix f0;
  std::vector<BlockMatrix> fs;
  Eigen::VectorXd b;
  double obj_constant = 0;  // <obj, Z0>, added to the LMI optimum
};

SliceLmi slice_objective_lmi(const SymSlice& slice, const RatMat& obj) {
  SliceLmi lmi;
  lmi.f0.blocks = {sym_to_double(slice.z0)};
  lmi.b.resize(static_cast<int>(slice.basis.size()));
  for (size_t t = 0; t < slice.basis.size(); ++t) {
    BlockMatrix ft;
    ft.blocks = {sym_to_double(slice.basis[t])};
    lmi.fs.push_back(ft);
    lmi.b(static_cast<int>(t)) =
        to_double(Rat((obj.cwiseProduct(slice.basis[t])).sum()));
  }
  lmi.obj_constant = to_double(Rat((obj.cwiseProduct(slice.z0)).sum()));
  return lmi;
}

// Facet optima are compared against 1 at the caller's tol; resolve them an
// order of magnitude below it.
SdpOptions tightened(const SdpOptions& opts) {
  SdpOptions t = opts;
  t.tol = std::min(t.tol, 1e-9);
  t.gap_tol = std::min(t.gap_tol, 1e-9);
  return t;
}

SliceLmi slice_lambda_min_lmi(const SymSlice& slice, int k) {
  SliceLmi lmi;
  lmi.f0.blocks = {sym_to_double(slice.z0)};
  for (const auto& d : slice.basis) {
    BlockMatrix ft;
    ft.blocks = {sym_to_double(d)};
    lmi.fs.push_back(ft);
  }
  BlockMatrix tcoef;
  tcoef.blocks = {-Eigen::MatrixXd::Identity(k, k)};
  lmi.fs.push_back(tcoef);
  lmi.b = Eigen::VectorXd::Zero(static_cast<int>(slice.basis.size()) + 1);
  lmi.b(lmi.b.size() - 1) = 1.0;
  return lmi;
}

}  // namespace

ConeLift to_cone_lift(const PolyhedralLift& lift) {
  ConeLift cl;
  cl.cone = Cone::Nonneg;
  cl.k = lift.k;
  cl.eq_a = lift.eq_coeffs;
  cl.eq_b = lift.eq_rhs;
  cl.proj_a = lift.recover_mat;
  cl.proj_off = lift.recover_off;
  return cl;
}

ConeLift to_cone_lift(const SpectrahedralLift& lift, const Polytope& p) {
  const int f = p.num_facets();
  const int n = p.dim();
  if (static_cast<int>(lift.col_factors.size()) != f)
    throw Error(Errc::ShapeMismatch, "one coupling per facet expected");
  const RatMat& g = p.facet_normals();
  RatMat nsp = left_nullspace(g);  // (f - n) x f
  ConeLift cl;
  cl.cone = Cone::Psd;
  cl.k = lift.k;
  cl.eq_b = nsp * RatVec::Ones(f);
  for (int r = 0; r < nsp.rows(); ++r) {
    RatMat e = RatMat::Zero(lift.k, lift.k);
    for (int j = 0; j < f; ++j)
      if (nsp(r, j) != 0) e += nsp(r, j) * lift.col_factors[j];
    cl.eq_mats.push_back(std::move(e));
  }
  RatMat pinv = pseudo_inverse(g);  // n x f
  cl.proj_off = pinv * RatVec::Ones(f);
  for (int t = 0; t < n; ++t) {
    RatMat pm = RatMat::Zero(lift.k, lift.k);
    for (int j = 0; j < f; ++j)
      if (pinv(t, j) != 0) pm -= pinv(t, j) * lift.col_factors[j];
    cl.proj_mats.push_back(std::move(pm));
  }
  return cl;
}

PolyhedralLift build_polyhedral_lift(const Polytope& p,
                                     const NonnegFactorization& fac) {
  if (!verify_nonneg_factorization(slack_matrix(p).entries, fac))
    throw Error(Errc::FactorizationInvalid,
                "factorization does not reproduce the slack matrix");
  const RatMat& g = p.facet_normals();  // F, f x n
  const int f = p.num_facets();
  RatVec d = RatVec::Ones(f);

  RatMat nsp = left_nullspace(g);
  RatMat eq = nsp * fac.b.transpose();  // (f-n) x k, possibly dependent rows
  RatVec rhs = nsp * d;
  auto canon = canonical_affine(eq, rhs);
  if (!canon)
    throw Error(Errc::FactorizationInvalid, "eliminated system inconsistent");

  PolyhedralLift lift;
  lift.k = fac.k;
  lift.eq_coeffs = canon->coeffs;
  lift.eq_rhs = canon->rhs;
  RatMat pinv = pseudo_inverse(g);
  lift.recover_mat = -(pinv * fac.b.transpose());
  lift.recover_off = pinv * d;
  lift.source = fac;
  return lift;
}

SpectrahedralLift build_psd_lift(const Polytope& p, const PsdFactorization& fac,
                                 double tol) {
  if (!verify_psd_factorization(slack_matrix(p).entries, fac, tol))
    throw Error(Errc::FactorizationInvalid,
                "factorization does not reproduce the slack matrix");
  if (rank_exact(p.facet_normals()) < p.dim())
    throw Error(Errc::ProjectionIllDefined,
                "recover map is not single-valued");
  SpectrahedralLift lift;
  lift.k = fac.k;
  if (fac.has_exact()) {
    lift.col_factors = fac.col_exact;
  } else {
    for (const auto& b : fac.col_factors)
      lift.col_factors.push_back(to_rat_matrix(0.5 * (b + b.transpose())));
  }
  lift.source = fac;
  return lift;
}

ProperCheck lift_properness(const ConeLift& lift, double tol,
                            const SdpOptions& opts) {
  ProperCheck out;
  if (lift.cone == Cone::Nonneg) {
    // max t s.t. eq_a (z + t 1) = eq_b, z >= 0, t free.
    const int m = static_cast<int>(lift.eq_a.rows());
    const int k = lift.k;
    LpProblem lp;
    lp.a = RatMat::Zero(m, k + 2);
    lp.a.leftCols(k) = lift.eq_a;
    RatVec ones_col = lift.eq_a * RatVec::Ones(k);
    lp.a.col(k) = ones_col;
    lp.a.col(k + 1) = -ones_col;
    lp.b = lift.eq_b;
    lp.c = RatVec::Zero(k + 2);
    lp.c(k) = 1;
    lp.c(k + 1) = -1;
    lp.maximize = true;
    LpSolution sol = simplex_solve(lp);
    if (sol.status == LpStatus::Unbounded) {
      out.proper = true;
      out.margin = std::numeric_limits<double>::infinity();
      return out;
    }
    if (sol.status != LpStatus::Optimal) return out;  // empty slice
    out.margin = to_double(sol.objective);
    out.proper = to_double(sol.objective) > tol;
    return out;
  }
  SymSlice slice;
  if (!parametrize_sym_slice(lift.k, lift.eq_mats, lift.eq_b, slice))
    return out;
  SliceLmi lmi = slice_lambda_min_lmi(slice, lift.k);
  SdpSolution sol = solve_lmi(lmi.f0, lmi.fs, lmi.b, opts);
  if (sol.status == SdpStatus::Unbounded) {
    out.proper = true;
    out.margin = std::numeric_limits<double>::infinity();
    return out;
  }
  if (sol.status != SdpStatus::Optimal) return out;
  out.margin = sol.primal_obj;
  out.proper = sol.primal_obj > tol;
  return out;
}

LiftVerification verify_lift(const Polytope& p, const ConeLift& lift,
                             double tol, bool exact_lp,
                             const SdpOptions& opts) {
  LiftVerification ver;
  ver.tol = tol;
  const int n = p.dim();
  if (lift.ambient_dim() != n)
    throw Error(Errc::ShapeMismatch, "lift projects into the wrong dimension");

  bool all_vertices = true, all_facets = true;

  if (lift.cone == Cone::Nonneg) {
    ver.exact = exact_lp;
    const int m = static_cast<int>(lift.eq_a.rows());
    // Float mode delegates to the sdp-core LP on the same data.
    auto float_lp = [&](const RatMat& a, const RatVec& b, const RatVec& c,
                        bool maximize) {
      SdpProblem prob;
      prob.block_sizes.assign(lift.k, 1);
      prob.maximize = maximize;
      prob.objective = BlockMatrix::zero(prob.block_sizes);
      for (int t = 0; t < lift.k; ++t)
        prob.objective.blocks[t](0, 0) = to_double(c(t));
      prob.rhs.resize(a.rows());
      for (Eigen::Index r = 0; r < a.rows(); ++r) {
        BlockMatrix ar = BlockMatrix::zero(prob.block_sizes);
        for (int t = 0; t < lift.k; ++t)
          ar.blocks[t](0, 0) = to_double(a(r, t));
        prob.constraints.push_back(ar);
        prob.rhs(r) = to_double(b(r));
      }
      return solve_lp(prob, false, opts);
    };
    // Vertex preimages: {y >= 0 : eq_a y = eq_b, proj(y) = vertex}.
    for (int i = 0; i < p.num_vertices(); ++i) {
      RatMat a(m + n, lift.k);
      a.topRows(m) = lift.eq_a;
      a.bottomRows(n) = lift.proj_a;
      RatVec b(m + n);
      b.head(m) = lift.eq_b;
      b.tail(n) = p.vertices().row(i).transpose() - lift.proj_off;
      bool ok;
      Eigen::VectorXd preimage = Eigen::VectorXd::Zero(lift.k);
      if (exact_lp) {
        LpSolution sol = simplex_solve({a, b, RatVec::Zero(lift.k), false});
        ok = sol.status == LpStatus::Optimal;
        if (ok) preimage = to_double_matrix(RatMat(sol.x));
      } else {
        LpOutcome out = float_lp(a, b, RatVec::Zero(lift.k), false);
        ok = out.solution.status == SdpStatus::Optimal;
        if (ok)
          for (int t = 0; t < lift.k; ++t)
            preimage(t) = out.solution.x.blocks[t](0, 0);
      }
      ver.vertex_feasible.push_back(ok);
      all_vertices = all_vertices && ok;
      ver.vertex_preimages.push_back(preimage);
    }
    // Facet support optima.
    for (int j = 0; j < p.num_facets(); ++j) {
      RatVec gj = p.facet_normals().row(j).transpose();
      RatVec cost = lift.proj_a.transpose() * gj;
      double value;
      bool solved;
      if (exact_lp) {
        LpSolution sol = simplex_solve({lift.eq_a, lift.eq_b, cost, true});
        solved = sol.status == LpStatus::Optimal;
        if (solved) {
          Rat exact_value = sol.objective + gj.dot(lift.proj_off);
          ver.facet_support_exact.push_back(exact_value);
          value = to_double(exact_value);
        }
      } else {
        LpOutcome out = float_lp(lift.eq_a, lift.eq_b, cost, true);
        solved = out.solution.status == SdpStatus::Optimal;
        value = out.solution.primal_obj + to_double(Rat(gj.dot(lift.proj_off)));
      }
      if (!solved) {
        all_facets = false;
        ver.facet_support_values.push_back(
            std::numeric_limits<double>::infinity());
        if (exact_lp) ver.facet_support_exact.push_back(0);
        continue;
      }
      ver.facet_support_values.push_back(value);
      if (std::fabs(value - 1.0) > tol) all_facets = false;
    }
    ver.verdict = all_vertices && all_facets;
    return ver;
  }

  // Psd cone.
  SymSlice slice;
  if (!parametrize_sym_slice(lift.k, lift.eq_mats, lift.eq_b, slice)) {
    ver.verdict = false;
    return ver;
  }
  for (int i = 0; i < p.num_vertices(); ++i) {
    // Pin the projection to the vertex, then maximize the least eigenvalue.
    std::vector<RatMat> eqs = lift.eq_mats;
    RatVec rhs(lift.eq_b.size() + n);
    rhs.head(lift.eq_b.size()) = lift.eq_b;
    for (int t = 0; t < n; ++t) {
      eqs.push_back(lift.proj_mats[t]);
      rhs(lift.eq_b.size() + t) =
          p.vertices()(i, t) - lift.proj_off(t);
    }
    SymSlice vslice;
    bool ok = parametrize_sym_slice(lift.k, eqs, rhs, vslice);
    Eigen::MatrixXd preimage = Eigen::MatrixXd::Zero(lift.k, lift.k);
    if (ok) {
      SliceLmi lmi = slice_lambda_min_lmi(vslice, lift.k);
      SdpSolution sol = solve_lmi(lmi.f0, lmi.fs, lmi.b, tightened(opts));
      ok = (sol.status == SdpStatus::Optimal && sol.primal_obj >= -tol) ||
           sol.status == SdpStatus::Unbounded;
      if (ok && sol.y.size() > 0) {
        // The LMI matrix is Z(w) - tI, so the preimage adds t back.
        preimage = sol.s.blocks[0] +
                   sol.y(sol.y.size() - 1) *
                       Eigen::MatrixXd::Identity(lift.k, lift.k);
      }
    }
    ver.vertex_feasible.push_back(ok);
    ver.vertex_preimages_psd.push_back(preimage);
    all_vertices = all_vertices && ok;
  }
  for (int j = 0; j < p.num_facets(); ++j) {
    RatMat obj = RatMat::Zero(lift.k, lift.k);
    Rat off(0);
    for (int t = 0; t < n; ++t) {
      obj += p.facet_normals()(j, t) * lift.proj_mats[t];
      off += p.facet_normals()(j, t) * lift.proj_off(t);
    }
    SliceLmi lmi = slice_objective_lmi(slice, obj);
    SdpSolution sol = solve_lmi(lmi.f0, lmi.fs, lmi.b, tightened(opts));
    if (sol.status == SdpStatus::MaxIter || sol.status == SdpStatus::IllPosed)
      throw Error(Errc::SolverFailure,
                  "support solve stalled on facet " + std::to_string(j));
    if (sol.status != SdpStatus::Optimal) {
      // Unbounded support or empty slice: the lift does not project onto P.
      all_facets = false;
      ver.facet_support_values.push_back(
          std::numeric_limits<double>::infinity());
      continue;
    }
    double value = sol.primal_obj + lmi.obj_constant + to_double(off);
    ver.facet_support_values.push_back(value);
    if (std::fabs(value - 1.0) > tol) all_facets = false;
  }
  ver.verdict = all_vertices && all_facets;
  return ver;
}

LiftVerification verify_lift(const Polytope& p, const PolyhedralLift& lift,
                             double tol, bool exact_lp) {
  return verify_lift(p, to_cone_lift(lift), tol, exact_lp);
}

LiftVerification verify_lift(const Polytope& p, const SpectrahedralLift& lift,
                             double tol, const SdpOptions& opts) {
  return verify_lift(p, to_cone_lift(lift, p), tol, false, opts);
}

ExtractedFactorization lift_to_factorization(const Polytope& p,
                                             const ConeLift& lift, double tol,
                                             const SdpOptions& opts) {
  ProperCheck proper = lift_properness(lift, opts.tol, opts);
  if (!proper.proper)
    throw Error(Errc::NotProper,
                "slice does not meet the interior of the cone");

  ExtractedFactorization out;
  out.cone = lift.cone;
  const int n = p.dim();
  const int v = p.num_vertices();
  const int f = p.num_facets();

  if (lift.cone == Cone::Nonneg) {
    NonnegFactorization fac;
    fac.k = lift.k;
    fac.a = RatMat::Zero(v, lift.k);
    fac.b = RatMat::Zero(lift.k, f);
    const int m = static_cast<int>(lift.eq_a.rows());
    for (int i = 0; i < v; ++i) {
      RatMat a(m + n, lift.k);
      a.topRows(m) = lift.eq_a;
      a.bottomRows(n) = lift.proj_a;
      RatVec b(m + n);
      b.head(m) = lift.eq_b;
      b.tail(n) = p.vertices().row(i).transpose() - lift.proj_off;
      LpSolution sol = simplex_solve({a, b, RatVec::Zero(lift.k), false});
      if (sol.status != LpStatus::Optimal)
        throw Error(Errc::SolverFailure,
                    "vertex " + std::to_string(i) + " has no preimage");
      fac.a.row(i) = sol.x.transpose();
    }
    for (int j = 0; j < f; ++j) {
      RatVec gj = p.facet_normals().row(j).transpose();
      RatVec cost = lift.proj_a.transpose() * gj;
      LpSolution sol = simplex_solve({lift.eq_a, lift.eq_b, cost, true});
      if (sol.status != LpStatus::Optimal)
        throw Error(Errc::SolverFailure,
                    "support optimization failed on facet " +
                        std::to_string(j));
      // Dual-derived column factor: E' lambda - proj_a' g_j, nonnegative by
      // dual feasibility.
      RatVec bj = lift.eq_a.transpose() * sol.y - cost;
      fac.b.col(j) = bj;
    }
    if (!verify_nonneg_factorization(slack_matrix(p).entries, fac))
      throw Error(Errc::SolverFailure,
                  "extracted factorization failed exact verification; the "
                  "lift does not project onto the polytope");
    out.nonneg = fac;
    return out;
  }

  // Psd cone.
  SymSlice slice;
  if (!parametrize_sym_slice(lift.k, lift.eq_mats, lift.eq_b, slice))
    throw Error(Errc::NotProper, "slice is empty");
  PsdFactorization fac;
  fac.k = lift.k;
  for (int i = 0; i < v; ++i) {
    std::vector<RatMat> eqs = lift.eq_mats;
    RatVec rhs(lift.eq_b.size() + n);
    rhs.head(lift.eq_b.size()) = lift.eq_b;
    for (int t = 0; t < n; ++t) {
      eqs.push_back(lift.proj_mats[t]);
      rhs(lift.eq_b.size() + t) = p.vertices()(i, t) - lift.proj_off(t);
    }
    SymSlice vslice;
    if (!parametrize_sym_slice(lift.k, eqs, rhs, vslice))
      throw Error(Errc::SolverFailure,
                  "vertex " + std::to_string(i) + " has no preimage");
    SliceLmi lmi = slice_lambda_min_lmi(vslice, lift.k);
    SdpSolution sol = solve_lmi(lmi.f0, lmi.fs, lmi.b, tightened(opts));
    if (sol.status != SdpStatus::Optimal || sol.primal_obj < -tol)
      throw Error(Errc::SolverFailure,
                  "vertex " + std::to_string(i) + " has no psd preimage");
    Eigen::MatrixXd z = sol.s.blocks[0] +
                        sol.y(sol.y.size() - 1) *
                            Eigen::MatrixXd::Identity(lift.k, lift.k);
    fac.row_factors.push_back(0.5 * (z + z.transpose()));
  }
  for (int j = 0; j < f; ++j) {
    // Primal standard form: max <C_j, Z> s.t. <E_m, Z> = e_m, Z >= 0; the
    // dual multipliers build the column factor sum lambda_m E_m - C_j.
    RatMat obj = RatMat::Zero(lift.k, lift.k);
    Rat off(0);
    for (int t = 0; t < n; ++t) {
      obj += p.facet_normals()(j, t) * lift.proj_mats[t];
      off += p.facet_normals()(j, t) * lift.proj_off(t);
    }
    SdpProblem prob;
    prob.block_sizes = {lift.k};
    prob.maximize = true;
    prob.objective.blocks = {sym_to_double(obj)};
    prob.rhs.resize(static_cast<int>(lift.eq_mats.size()));
    for (size_t mth = 0; mth < lift.eq_mats.size(); ++mth) {
      BlockMatrix am;
      am.blocks = {sym_to_double(lift.eq_mats[mth])};
      prob.constraints.push_back(am);
      prob.rhs(static_cast<int>(mth)) = to_double(lift.eq_b(mth));
    }
    SdpSolution sol = solve_sdp(prob, tightened(opts));
    if (sol.status != SdpStatus::Optimal)
      throw Error(Errc::SolverFailure,
                  "support optimization failed on facet " + std::to_string(j));
    Eigen::MatrixXd bj = -sym_to_double(obj);
    for (size_t mth = 0; mth < lift.eq_mats.size(); ++mth)
      bj += sol.y(static_cast<int>(mth)) * sym_to_double(lift.eq_mats[mth]);
    fac.col_factors.push_back(0.5 * (bj + bj.transpose()));
  }
  if (!verify_psd_factorization(slack_matrix(p).entries, fac,
                                std::max(tol, 10 * opts.tol)))
    throw Error(Errc::SolverFailure,
                "extracted factorization failed verification within tol");
  out.psd = fac;
  return out;
}

}  // namespace liftkit
