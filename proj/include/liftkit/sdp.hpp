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

#ifndef LIFTKIT_SDP_HPP
#define LIFTKIT_SDP_HPP

#include <vector>

#include "liftkit/error.hpp"
#include "liftkit/rational.hpp"

namespace liftkit {

// Symmetric block-diagonal value; LP data is the all-blocks-size-1 case.
struct BlockMatrix {
  std::vector<Eigen::MatrixXd> blocks;

  static BlockMatrix zero(const std::vector<int>& sizes);
  static BlockMatrix identity(const std::vector<int>& sizes, double scale = 1);

  double dot(const BlockMatrix& other) const;  // trace inner product
  double norm() const;
  BlockMatrix& axpy(double alpha, const BlockMatrix& other);  // *this += a*o
  BlockMatrix scaled(double alpha) const;
  int total_dim() const;
};

// optimize <C, X> subject to <A_i, X> = b_i and X psd block-diagonal.
struct SdpProblem {
  std::vector<int> block_sizes;
  BlockMatrix objective;                   // C
  std::vector<BlockMatrix> constraints;    // A_i
  Eigen::VectorXd rhs;                     // b
  bool maximize = true;
};

enum class SdpStatus { Optimal, Infeasible, Unbounded, MaxIter, IllPosed };

const char* sdp_status_name(SdpStatus s);

struct SdpOptions {
  double tol = 1e-7;
  double gap_tol = 1e-6;
  int max_iter = 300;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::MaxIter;
  BlockMatrix x;      // primal blocks
  Eigen::VectorXd y;  // dual vector
  BlockMatrix s;      // dual slack blocks
  double primal_obj = 0;
  double dual_obj = 0;
  double duality_gap = 0;
  double primal_residual = 0;
  double dual_residual = 0;
  int iterations = 0;
};

// Primal-dual interior point (HKM scaling) on small dense blocks.
SdpSolution solve_sdp(const SdpProblem& prob, const SdpOptions& opts = {});

// max b'y subject to F0 + sum_i y_i F_i psd; y free. Returned solution's
// y is the LMI variable vector and s holds the psd matrix at the optimum.
SdpSolution solve_lmi(const BlockMatrix& f0,
                      const std::vector<BlockMatrix>& fs,
                      const Eigen::VectorXd& b, const SdpOptions& opts = {});

// min eigenvalue >= -tol via symmetric eigendecomposition; throws
// NotSymmetric when m is not symmetric within tol.
bool psd_check(const Eigen::MatrixXd& m, double tol);

double min_eigenvalue(const Eigen::MatrixXd& m);

}  // namespace liftkit

#endif  // LIFTKIT_SDP_HPP
