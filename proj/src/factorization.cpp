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

#include "liftkit/factorization.hpp"

#include "liftkit/error.hpp"
#include "liftkit/sdp.hpp"

namespace liftkit {

namespace {

void check_nonneg_shapes(Eigen::Index rows, Eigen::Index cols,
                         const NonnegFactorization& fac) {
  if (fac.a.rows() != rows || fac.a.cols() != fac.k ||
      fac.b.rows() != fac.k || fac.b.cols() != cols)
    throw Error(Errc::ShapeMismatch,
                "factorization shapes do not match the target matrix");
}

void check_psd_shapes(Eigen::Index rows, Eigen::Index cols,
                      const PsdFactorization& fac) {
  if (static_cast<Eigen::Index>(fac.row_factors.size()) != rows ||
      static_cast<Eigen::Index>(fac.col_factors.size()) != cols)
    throw Error(Errc::ShapeMismatch,
                "factor counts do not match the target matrix");
  for (const auto& f : fac.row_factors)
    if (f.rows() != fac.k || f.cols() != fac.k)
      throw Error(Errc::ShapeMismatch, "row factor has wrong size");
  for (const auto& f : fac.col_factors)
    if (f.rows() != fac.k || f.cols() != fac.k)
      throw Error(Errc::ShapeMismatch, "col factor has wrong size");
}

}  // namespace

bool verify_nonneg_factorization(const RatMat& m,
                                 const NonnegFactorization& fac) {
  check_nonneg_shapes(m.rows(), m.cols(), fac);
  for (Eigen::Index i = 0; i < fac.a.rows(); ++i)
    for (Eigen::Index j = 0; j < fac.a.cols(); ++j)
      if (fac.a(i, j) < 0) return false;
  for (Eigen::Index i = 0; i < fac.b.rows(); ++i)
    for (Eigen::Index j = 0; j < fac.b.cols(); ++j)
      if (fac.b(i, j) < 0) return false;
  return RatMat(fac.a * fac.b) == m;
}

bool verify_nonneg_factorization(const Eigen::MatrixXd& m,
                                 const NonnegFactorization& fac, double tol) {
  check_nonneg_shapes(m.rows(), m.cols(), fac);
  Eigen::MatrixXd a = to_double_matrix(fac.a), b = to_double_matrix(fac.b);
  if (a.minCoeff() < 0 || b.minCoeff() < 0) return false;
  return ((a * b) - m).cwiseAbs().maxCoeff() <= tol;
}

bool verify_psd_factorization(const Eigen::MatrixXd& m,
                              const PsdFactorization& fac, double tol) {
  check_psd_shapes(m.rows(), m.cols(), fac);
  auto check_factor = [&](const Eigen::MatrixXd& f) {
    double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
    if ((f - f.transpose()).cwiseAbs().maxCoeff() > tol * scale)
      throw Error(Errc::NonSymmetricFactor, "factor is not symmetric");
    return min_eigenvalue(0.5 * (f + f.transpose())) >= -tol;
  };
  for (const auto& f : fac.row_factors)
    if (!check_factor(f)) return false;
  for (const auto& f : fac.col_factors)
    if (!check_factor(f)) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double pairing =
          fac.row_factors[i].cwiseProduct(fac.col_factors[j]).sum();
      if (std::fabs(pairing - m(i, j)) > tol) return false;
    }
  return true;
}

bool verify_psd_factorization(const RatMat& m, const PsdFactorization& fac,
                              double tol) {
  return verify_psd_factorization(to_double_matrix(m), fac, tol);
}

}  // namespace liftkit
