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

#include "liftkit/sqrt_rank.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <numeric>

#include "liftkit/error.hpp"
#include "liftkit/linalg.hpp"
#include "liftkit/quadfield.hpp"

namespace liftkit {

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Smallest k with k(k+1)/2 >= r; Hadamard squaring bounds rank(M) by
// rank(sqrt)*(rank(sqrt)+1)/2.
int sqrt_rank_lower_bound(int r) {
  int k = 0;
  while (k * (k + 1) / 2 < r) ++k;
  return k;
}

int numeric_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  double thresh = 1e-9 * std::max(1.0, svd.singularValues()(0));
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thresh) ++r;
  return r;
}

}  // namespace

SqrtRankResult sqrt_rank(const RatMat& m, const SearchBudget& budget) {
  const int v = static_cast<int>(m.rows());
  const int f = static_cast<int>(m.cols());
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      if (m(i, j) < 0)
        throw Error(Errc::ShapeMismatch, "matrix must be nonnegative");

  // Decompose every entry as coeff * sqrt(radicand).
  QuadTower tower;
  Eigen::MatrixXi radicand_gen(v, f);  // generator index, -1 for rational
  RatMat coeff(v, f);
  bool exact_mode = true;
  for (int i = 0; i < v && exact_mode; ++i)
    for (int j = 0; j < f; ++j) {
      auto dec = sqrt_decompose(m(i, j));
      if (!dec) {
        exact_mode = false;
        break;
      }
      coeff(i, j) = dec->coeff;
      radicand_gen(i, j) =
          dec->radicand == 1 ? -1 : tower.add_generator(dec->radicand);
    }
  if (tower.generators() > 8) exact_mode = false;

  // Support cells and the sign gauge: a spanning forest of the bipartite
  // row/column graph is pinned to +1.
  struct Cell {
    int i, j;
    bool free;
  };
  std::vector<Cell> cells;
  DisjointSet ds(v + f);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      if (m(i, j) != 0) cells.push_back({i, j, !ds.unite(i, v + j)});
  std::vector<int> free_cells;
  for (size_t c = 0; c < cells.size(); ++c)
    if (cells[c].free) free_cells.push_back(static_cast<int>(c));
  const int nfree = static_cast<int>(free_cells.size());

  const int lb = sqrt_rank_lower_bound(rank_exact(m));
  SqrtRankResult res;
  res.exact_arithmetic = exact_mode;
  res.rank = std::min(v, f) + 1;  // sentinel above any achievable rank

  long total = (nfree >= 62) ? -1 : (1L << nfree);
  long cap = (total < 0 || total > budget.max_patterns) ? budget.max_patterns
                                                        : total;
  res.complete = (total > 0 && total <= budget.max_patterns);

  Eigen::MatrixXd base(v, f);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      base(i, j) = std::sqrt(to_double(m(i, j)));

  for (long pattern = 0; pattern < cap; ++pattern) {
    ++res.patterns_tried;
    Eigen::MatrixXi signs = Eigen::MatrixXi::Zero(v, f);
    for (const Cell& c : cells) signs(c.i, c.j) = 1;
    for (int t = 0; t < nfree; ++t)
      if (pattern >> t & 1) {
        const Cell& c = cells[free_cells[t]];
        signs(c.i, c.j) = -1;
      }

    int rank;
    if (exact_mode) {
      TowerMatrix tm(tower, v, f);
      for (int i = 0; i < v; ++i)
        for (int j = 0; j < f; ++j) {
          if (m(i, j) == 0) continue;
          auto& e = tm.at(i, j);
          int g = radicand_gen(i, j);
          size_t mask = g < 0 ? 0 : (size_t{1} << g);
          e[mask] = signs(i, j) * coeff(i, j);
        }
      rank = tm.rank(res.rank);  // no use finishing past the best found
    } else {
      rank = numeric_rank(base.cwiseProduct(signs.cast<double>()));
    }

    if (rank < res.rank) {
      res.rank = rank;
      res.certificate.sign_matrix = signs;
      res.certificate.sqrt_matrix = base.cwiseProduct(signs.cast<double>());
      res.certificate.achieved_rank = rank;
      res.certificate.exact = exact_mode;
      if (rank <= lb) {
        res.complete = true;  // lower bound met: minimum certified
        break;
      }
    }
  }
  return res;
}

PsdFactorization psd_from_sqrt(const RatMat& m,
                               const SqrtRankCertificate& cert) {
  const int v = static_cast<int>(m.rows());
  const int f = static_cast<int>(m.cols());
  const int r = cert.achieved_rank;
  Eigen::MatrixXd h = cert.sqrt_matrix;
  if (h.rows() != v || h.cols() != f)
    throw Error(Errc::ShapeMismatch, "certificate does not match the matrix");

  // Rank factorization h = L * U with L (v x r), U (r x f).
  Eigen::FullPivLU<Eigen::MatrixXd> lu(h);
  lu.setThreshold(1e-9);
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(v, r);
  l.block(0, 0, v, r) =
      Eigen::MatrixXd(lu.matrixLU().leftCols(r).triangularView<Eigen::StrictlyLower>());
  l.diagonal().setOnes();
  Eigen::MatrixXd u =
      lu.matrixLU().topRows(r).triangularView<Eigen::Upper>();
  Eigen::MatrixXd left = (lu.permutationP().inverse() * l);
  Eigen::MatrixXd right = u * lu.permutationQ().inverse();

  PsdFactorization fac;
  fac.k = r;
  for (int i = 0; i < v; ++i) {
    Eigen::VectorXd a = left.row(i).transpose();
    fac.row_factors.push_back(a * a.transpose());
  }
  for (int j = 0; j < f; ++j) {
    Eigen::VectorXd b = right.col(j);
    fac.col_factors.push_back(b * b.transpose());
  }
  return fac;
}

}  // namespace liftkit
