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

#include "liftkit/linalg.hpp"

namespace liftkit {

Rref rref(const RatMat& m) {
  RatMat a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    a.row(r) /= a(r, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      a.row(i) -= a(i, c) * a.row(r);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

int rank_exact(const RatMat& m) {
  if (m.size() == 0) return 0;
  return static_cast<int>(rref(m).pivots.size());
}

RatMat nullspace(const RatMat& m) {
  const Eigen::Index cols = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
  RatMat basis = RatMat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = 1;
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
      basis(r.pivots[pi], static_cast<Eigen::Index>(k)) =
          -r.mat(static_cast<Eigen::Index>(pi), fc);
  }
  return basis;
}

RatMat left_nullspace(const RatMat& m) {
  RatMat nt = nullspace(RatMat(m.transpose()));
  return nt.transpose();
}

std::optional<RatVec> solve_linear(const RatMat& m, const RatVec& b) {
  RatMat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Rref r = rref(aug);
  RatVec x = RatVec::Zero(m.cols());
  for (size_t pi = 0; pi < r.pivots.size(); ++pi) {
    if (r.pivots[pi] == static_cast<int>(m.cols())) return std::nullopt;
    x(r.pivots[pi]) = r.mat(static_cast<Eigen::Index>(pi), m.cols());
  }
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  RatMat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMat::Identity(n, n);
  Rref r = rref(aug);
  if (static_cast<Eigen::Index>(r.pivots.size()) < n ||
      (n > 0 && r.pivots[n - 1] >= n))
    return std::nullopt;
  return RatMat(r.mat.rightCols(n));
}

RatVec solve_normal_equations(const RatMat& m, const RatVec& b) {
  RatMat mtm = m.transpose() * m;
  RatVec mtb = m.transpose() * b;
  auto sol = solve_linear(mtm, mtb);
  if (!sol)  // full-column-rank input keeps this unreachable
    return RatVec::Zero(m.cols());
  return *sol;
}

std::optional<AffineSystem> canonical_affine(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref r = rref(aug);
  for (int p : r.pivots)
    if (p == static_cast<int>(a.cols())) return std::nullopt;
  Eigen::Index nrows = static_cast<Eigen::Index>(r.pivots.size());
  AffineSystem sys;
  sys.coeffs = r.mat.topLeftCorner(nrows, a.cols());
  sys.rhs = r.mat.col(a.cols()).head(nrows);
  return sys;
}

bool affine_sets_equal(const RatMat& a1, const RatVec& b1, const RatMat& a2,
                       const RatVec& b2) {
  auto c1 = canonical_affine(a1, b1);
  auto c2 = canonical_affine(a2, b2);
  if (!c1 || !c2) return !c1 && !c2;  // both empty
  return c1->coeffs == c2->coeffs && c1->rhs == c2->rhs;
}

}  // namespace liftkit
