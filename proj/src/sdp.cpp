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

#include "liftkit/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace liftkit {

const char* sdp_status_name(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "Optimal";
    case SdpStatus::Infeasible: return "Infeasible";
    case SdpStatus::Unbounded: return "Unbounded";
    case SdpStatus::MaxIter: return "MaxIter";
    case SdpStatus::IllPosed: return "IllPosed";
  }
  return "?";
}

BlockMatrix BlockMatrix::zero(const std::vector<int>& sizes) {
  BlockMatrix b;
  for (int s : sizes) b.blocks.push_back(Eigen::MatrixXd::Zero(s, s));
  return b;
}

BlockMatrix BlockMatrix::identity(const std::vector<int>& sizes, double scale) {
  BlockMatrix b;
  for (int s : sizes)
    b.blocks.push_back(scale * Eigen::MatrixXd::Identity(s, s));
  return b;
}

double BlockMatrix::dot(const BlockMatrix& other) const {
  double acc = 0;
  for (size_t i = 0; i < blocks.size(); ++i)
    acc += blocks[i].cwiseProduct(other.blocks[i]).sum();
  return acc;
}

double BlockMatrix::norm() const {
  double acc = 0;
  for (const auto& b : blocks) acc += b.squaredNorm();
  return std::sqrt(acc);
}

BlockMatrix& BlockMatrix::axpy(double alpha, const BlockMatrix& other) {
  for (size_t i = 0; i < blocks.size(); ++i)
    blocks[i] += alpha * other.blocks[i];
  return *this;
}

BlockMatrix BlockMatrix::scaled(double alpha) const {
  BlockMatrix out = *this;
  for (auto& b : out.blocks) b *= alpha;
  return out;
}

int BlockMatrix::total_dim() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  return n;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool psd_check(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols())
    throw Error(Errc::NotSymmetric, "matrix is not square");
  double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (asym > tol * scale)
    throw Error(Errc::NotSymmetric, "matrix is not symmetric within tol");
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  return min_eigenvalue(sym) >= -tol;
}

namespace {

// Largest step in (0, 1] keeping m + alpha*d positive definite, found by
// Cholesky backtracking; shrinking a successful step preserves definiteness.
double pd_step(const BlockMatrix& m, const BlockMatrix& d) {
  double alpha = 1.0;
  for (int tries = 0; tries < 60; ++tries) {
    bool ok = true;
    for (size_t b = 0; b < m.blocks.size() && ok; ++b) {
      Eigen::MatrixXd cand = m.blocks[b] + alpha * d.blocks[b];
      Eigen::LLT<Eigen::MatrixXd> llt(cand);
      if (llt.info() != Eigen::Success) ok = false;
    }
    if (ok) return alpha;
    alpha *= 0.8;
  }
  return 0.0;
}

bool is_symmetric_data(const BlockMatrix& m) {
  for (const auto& b : m.blocks)
    if ((b - b.transpose()).cwiseAbs().maxCoeff() >
        1e-12 * std::max(1.0, b.cwiseAbs().maxCoeff()))
      return false;
  return true;
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& prob, const SdpOptions& opts) {
  const int m = static_cast<int>(prob.constraints.size());
  const auto& sizes = prob.block_sizes;
  const int nb = static_cast<int>(sizes.size());

  if (static_cast<int>(prob.rhs.size()) != m)
    throw Error(Errc::ShapeMismatch, "rhs length != constraint count");
  if (!is_symmetric_data(prob.objective))
    throw Error(Errc::NotSymmetric, "objective blocks must be symmetric");
  for (const auto& a : prob.constraints)
    if (!is_symmetric_data(a))
      throw Error(Errc::NotSymmetric, "constraint blocks must be symmetric");

  // Rank check of the constraint system (svec rows).
  {
    int svec_dim = 0;
    for (int s : sizes) svec_dim += s * (s + 1) / 2;
    Eigen::MatrixXd rows(m, svec_dim);
    for (int i = 0; i < m; ++i) {
      int off = 0;
      for (int b = 0; b < nb; ++b) {
        const auto& blk = prob.constraints[i].blocks[b];
        for (int r = 0; r < sizes[b]; ++r)
          for (int c = r; c < sizes[b]; ++c)
            rows(i, off++) = (r == c) ? blk(r, c) : 2 * blk(r, c);
      }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
    qr.setThreshold(1e-11);
    if (qr.rank() < m)
      throw Error(Errc::IllPosed, "rank-deficient constraint system");
  }

  // Internal sense: minimize <C, X>.
  BlockMatrix C = prob.maximize ? prob.objective.scaled(-1) : prob.objective;
  const Eigen::VectorXd& b = prob.rhs;
  const int N = std::max(1, C.total_dim());

  double amax = 1.0;
  for (const auto& a : prob.constraints) amax = std::max(amax, a.norm());
  double bmax = m ? std::max(1.0, b.cwiseAbs().maxCoeff()) : 1.0;
  BlockMatrix X = BlockMatrix::identity(sizes, 10.0 * bmax);
  BlockMatrix S =
      BlockMatrix::identity(sizes, 10.0 * std::max(amax, C.norm()));
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);

  SdpSolution sol;
  sol.x = X;
  sol.s = S;
  sol.y = y;

  auto finish = [&](SdpStatus st, int iters) {
    sol.status = st;
    sol.x = X;
    // In the max sense the dual slack sum y_i A_i - C coincides with the
    // internal one, so only y and the objectives flip sign.
    sol.s = S;
    sol.y = prob.maximize ? Eigen::VectorXd(-y) : y;
    double pobj = C.dot(X);
    double dobj = b.dot(y);
    sol.primal_obj = prob.maximize ? -pobj : pobj;
    sol.dual_obj = prob.maximize ? -dobj : dobj;
    sol.duality_gap = std::fabs(pobj - dobj);
    sol.iterations = iters;
    return sol;
  };

  std::vector<Eigen::LLT<Eigen::MatrixXd>> sllt(nb);
  Eigen::MatrixXd schur(m, m);
  Eigen::VectorXd rp(m), q(m);

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    for (int i = 0; i < m; ++i) rp(i) = b(i) - prob.constraints[i].dot(X);
    BlockMatrix Rd = C;
    Rd.axpy(-1.0, S);
    for (int i = 0; i < m; ++i) Rd.axpy(-y(i), prob.constraints[i]);

    double mu = X.dot(S) / N;
    double pobj = C.dot(X), dobj = b.dot(y);
    double p_res = m ? rp.cwiseAbs().maxCoeff() / bmax : 0.0;
    double d_res = Rd.norm() / (1.0 + C.norm());
    double gap_rel =
        std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));
    sol.primal_residual = p_res;
    sol.dual_residual = d_res;

    if (p_res <= opts.tol && d_res <= opts.tol && gap_rel <= opts.gap_tol)
      return finish(SdpStatus::Optimal, iter - 1);

    // Divergence checks.
    if (d_res <= 1e2 * opts.tol && dobj > 1e9 * bmax && iter > 15)
      return finish(SdpStatus::Infeasible, iter - 1);
    if (p_res <= 1e2 * opts.tol && pobj < -1e9 * std::max(1.0, C.norm()) &&
        iter > 15)
      return finish(SdpStatus::Unbounded, iter - 1);

    for (int bi = 0; bi < nb; ++bi) {
      sllt[bi].compute(S.blocks[bi]);
      if (sllt[bi].info() != Eigen::Success)
        return finish(SdpStatus::MaxIter, iter - 1);
    }

    // Schur complement M(i,j) = <A_i, S^-1 A_j X>.
    std::vector<BlockMatrix> w(m);
    for (int j = 0; j < m; ++j) {
      w[j] = BlockMatrix::zero(sizes);
      for (int bi = 0; bi < nb; ++bi)
        w[j].blocks[bi] =
            sllt[bi].solve(prob.constraints[j].blocks[bi] * X.blocks[bi]);
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double acc = 0;
        for (int bi = 0; bi < nb; ++bi)
          acc += prob.constraints[i]
                     .blocks[bi]
                     .cwiseProduct(w[j].blocks[bi].transpose())
                     .sum();
        schur(i, j) = acc;
      }

    BlockMatrix rdx = BlockMatrix::zero(sizes);  // S^-1 (Rd X)
    BlockMatrix sinv = BlockMatrix::zero(sizes);
    for (int bi = 0; bi < nb; ++bi) {
      rdx.blocks[bi] = sllt[bi].solve(Rd.blocks[bi] * X.blocks[bi]);
      sinv.blocks[bi] = sllt[bi].solve(
          Eigen::MatrixXd::Identity(sizes[bi], sizes[bi]));
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    if (m) lu.compute(schur);

    auto newton = [&](double sigma_mu, Eigen::VectorXd& dy, BlockMatrix& dS,
                      BlockMatrix& dX) {
      for (int i = 0; i < m; ++i) {
        double acc = 0;
        for (int bi = 0; bi < nb; ++bi) {
          acc += prob.constraints[i]
                     .blocks[bi]
                     .cwiseProduct(rdx.blocks[bi].transpose())
                     .sum();
          acc -= sigma_mu * prob.constraints[i]
                                .blocks[bi]
                                .cwiseProduct(sinv.blocks[bi])
                                .sum();
        }
        q(i) = rp(i) + prob.constraints[i].dot(X) + acc;
      }
      dy = m ? Eigen::VectorXd(lu.solve(q)) : Eigen::VectorXd();
      dS = Rd;
      for (int i = 0; i < m; ++i) dS.axpy(-dy(i), prob.constraints[i]);
      dX = BlockMatrix::zero(sizes);
      for (int bi = 0; bi < nb; ++bi) {
        Eigen::MatrixXd t =
            sigma_mu * sinv.blocks[bi] - X.blocks[bi] -
            sllt[bi].solve(dS.blocks[bi] * X.blocks[bi]);
        dX.blocks[bi] = 0.5 * (t + t.transpose());
      }
    };

    Eigen::VectorXd dy;
    BlockMatrix dS, dX;
    newton(0.0, dy, dS, dX);  // predictor
    double ap = pd_step(X, dX);
    double ad = pd_step(S, dS);
    BlockMatrix Xa = X;
    Xa.axpy(0.98 * ap, dX);
    BlockMatrix Sa = S;
    Sa.axpy(0.98 * ad, dS);
    double mu_aff = Xa.dot(Sa) / N;
    double sigma = std::pow(mu_aff / std::max(mu, 1e-300), 3.0);
    sigma = std::clamp(sigma, 0.02, 0.9);

    newton(sigma * mu, dy, dS, dX);  // corrector
    ap = 0.98 * pd_step(X, dX);
    ad = 0.98 * pd_step(S, dS);
    if (ap <= 1e-12 && ad <= 1e-12)
      return finish(SdpStatus::MaxIter, iter);

    X.axpy(ap, dX);
    y += ad * dy;
    S.axpy(ad, dS);
  }
  return finish(SdpStatus::MaxIter, opts.max_iter);
}

SdpSolution solve_lmi(const BlockMatrix& f0, const std::vector<BlockMatrix>& fs,
                      const Eigen::VectorXd& b, const SdpOptions& opts) {
  // max b'y s.t. F0 + sum y_i F_i >= 0 is the dual of
  // min <F0, X> s.t. <F_i, X> = -b_i, X >= 0.
  SdpProblem prob;
  for (const auto& blk : f0.blocks)
    prob.block_sizes.push_back(static_cast<int>(blk.rows()));
  prob.objective = f0;
  prob.maximize = false;
  prob.rhs = -b;
  prob.constraints = fs;
  SdpSolution inner = solve_sdp(prob, opts);

  SdpSolution out = inner;
  // LMI variables are the negated duals; the psd matrix point sits in s.
  out.y = -inner.y;
  out.s = f0;
  for (int i = 0; i < out.y.size(); ++i) out.s.axpy(out.y(i), fs[i]);
  out.primal_obj = b.dot(out.y);
  out.dual_obj = inner.primal_obj;
  if (inner.status == SdpStatus::Infeasible)
    out.status = SdpStatus::Unbounded;
  else if (inner.status == SdpStatus::Unbounded)
    out.status = SdpStatus::Infeasible;
  return out;
}

}  // namespace liftkit
