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

#ifndef LIFTKIT_QUADFIELD_HPP
#define LIFTKIT_QUADFIELD_HPP

#include <optional>
#include <vector>

#include "liftkit/rational.hpp"

namespace liftkit {

// Exact arithmetic in Q(sqrt(d_1), ..., sqrt(d_r)) for squarefree pairwise
// distinct generators d_i > 1. An element is a vector of 2^r rational
// coordinates over the basis {prod_{i in S} sqrt(d_i) : S subset of [r]}
// indexed by bitmask.
class QuadTower {
 public:
  QuadTower() = default;

  int generators() const { return static_cast<int>(gens_.size()); }
  long long generator(int i) const { return gens_[i]; }
  size_t dim() const { return size_t{1} << gens_.size(); }

  // Index of squarefree d among the generators, adding it if new.
  int add_generator(long long d);

  // Basis element sqrt(D_S) * sqrt(D_T) = (prod_{i in S&T} d_i) sqrt(D_{S^T}).
  void mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
           std::vector<Rat>& out) const;

  std::vector<Rat> inverse(const std::vector<Rat>& a) const;

  std::vector<Rat> zero() const { return std::vector<Rat>(dim(), Rat(0)); }
  std::vector<Rat> from_rat(const Rat& r) const;

  static bool is_zero(const std::vector<Rat>& a);

  double to_double(const std::vector<Rat>& a) const;

 private:
  // Inverse within the subfield spanned by the first `level` generators.
  std::vector<Rat> inverse_rec(const std::vector<Rat>& a, int level) const;

  std::vector<long long> gens_;
};

// sqrt(r) for r >= 0 as (coeff, squarefree radicand): sqrt(r) = c * sqrt(d).
// Returns nullopt when the squarefree part cannot be extracted by trial
// division (limit 10^6), in which case callers fall back to numerics.
struct SqrtDecomposition {
  Rat coeff;
  long long radicand;  // squarefree; 1 means the root is rational
};
std::optional<SqrtDecomposition> sqrt_decompose(const Rat& r);

// Matrix over the tower, as a flat row-major array of coordinate vectors.
class TowerMatrix {
 public:
  TowerMatrix(const QuadTower& t, int rows, int cols)
      : tower_(&t), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, t.zero()) {}

  std::vector<Rat>& at(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const std::vector<Rat>& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const QuadTower& tower() const { return *tower_; }

  // Exact Gaussian elimination over the tower; stops early and returns cap
  // once that many pivots are found (cap < 0 disables the cutoff).
  int rank(int cap = -1) const;

 private:
  const QuadTower* tower_;
  int rows_, cols_;
  std::vector<std::vector<Rat>> data_;
};

}  // namespace liftkit

#endif  // LIFTKIT_QUADFIELD_HPP
