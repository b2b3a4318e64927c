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

#include "liftkit/quadfield.hpp"

#include <algorithm>
#include <cmath>

#include "liftkit/error.hpp"

namespace liftkit {

int QuadTower::add_generator(long long d) {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == d) return static_cast<int>(i);
  gens_.push_back(d);
  return static_cast<int>(gens_.size()) - 1;
}

std::vector<Rat> QuadTower::from_rat(const Rat& r) const {
  auto v = zero();
  v[0] = r;
  return v;
}

bool QuadTower::is_zero(const std::vector<Rat>& a) {
  for (const Rat& c : a)
    if (c != 0) return false;
  return true;
}

void QuadTower::mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                    std::vector<Rat>& out) const {
  const size_t n = dim();
  out.assign(n, Rat(0));
  for (size_t s = 0; s < n; ++s) {
    if (a[s] == 0) continue;
    for (size_t t = 0; t < n; ++t) {
      if (b[t] == 0) continue;
      size_t common = s & t;
      Rat factor = a[s] * b[t];
      size_t bits = common;
      while (bits) {
        int i = __builtin_ctzll(bits);
        factor *= gens_[i];
        bits &= bits - 1;
      }
      out[s ^ t] += factor;
    }
  }
}

std::vector<Rat> QuadTower::inverse_rec(const std::vector<Rat>& a,
                                        int level) const {
  // Element of Q(sqrt(d_1..d_level)); split as x + y*sqrt(d_level).
  if (level == 0) {
    if (a[0] == 0) throw Error(Errc::IllPosed, "division by zero in tower");
    return {Rat(1) / a[0]};
  }
  const size_t half = size_t{1} << (level - 1);
  std::vector<Rat> x(a.begin(), a.begin() + half);
  std::vector<Rat> y(a.begin() + half, a.begin() + 2 * half);
  // (x + y s)^-1 = (x - y s) / (x^2 - y^2 d), all within the subfield.
  QuadTower sub;
  sub.gens_.assign(gens_.begin(), gens_.begin() + (level - 1));
  std::vector<Rat> x2, y2;
  sub.mul(x, x, x2);
  sub.mul(y, y, y2);
  std::vector<Rat> denom(half);
  for (size_t i = 0; i < half; ++i) denom[i] = x2[i] - y2[i] * gens_[level - 1];
  std::vector<Rat> denom_inv = sub.inverse_rec(denom, level - 1);
  std::vector<Rat> rx, ry;
  sub.mul(x, denom_inv, rx);
  sub.mul(y, denom_inv, ry);
  std::vector<Rat> out(2 * half);
  for (size_t i = 0; i < half; ++i) {
    out[i] = rx[i];
    out[half + i] = -ry[i];
  }
  return out;
}

std::vector<Rat> QuadTower::inverse(const std::vector<Rat>& a) const {
  return inverse_rec(a, static_cast<int>(gens_.size()));
}

double QuadTower::to_double(const std::vector<Rat>& a) const {
  double acc = 0;
  for (size_t s = 0; s < a.size(); ++s) {
    if (a[s] == 0) continue;
    double root = 1;
    size_t bits = s;
    while (bits) {
      int i = __builtin_ctzll(bits);
      root *= std::sqrt(static_cast<double>(gens_[i]));
      bits &= bits - 1;
    }
    acc += liftkit::to_double(a[s]) * root;
  }
  return acc;
}

std::optional<SqrtDecomposition> sqrt_decompose(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return SqrtDecomposition{Rat(0), 1};
  // sqrt(p/q) = sqrt(p q) / q.
  Int p = numerator(r), q = denominator(r);
  Int radicand = p * q;
  Int square = 1, rest = radicand;
  for (long long f = 2; f <= 1000000 && Int(f) * f <= rest; ++f) {
    Int f2 = Int(f) * f;
    while (rest % f2 == 0) {
      rest /= f2;
      square *= f;
    }
  }
  Int root = sqrt(rest);
  if (root * root == rest) {
    square *= root;
    rest = 1;
  }
  // All square factors f^2 with f <= 10^6 are gone, so anything below
  // 10^12 that is not itself a perfect square is squarefree.
  if (rest > Int(1000000) * 1000000) return std::nullopt;
  long long d = rest.convert_to<long long>();
  return SqrtDecomposition{Rat(square, q), d};
}

int TowerMatrix::rank(int cap) const {
  TowerMatrix a = *this;
  const QuadTower& t = *tower_;
  int rank = 0;
  std::vector<Rat> tmp, factor;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    if (cap >= 0 && rank >= cap) return cap;
    int piv = -1;
    for (int i = rank; i < rows_; ++i)
      if (!QuadTower::is_zero(a.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(a.at(rank, j), a.at(piv, j));
    std::vector<Rat> inv = t.inverse(a.at(rank, c));
    for (int i = rank + 1; i < rows_; ++i) {
      if (QuadTower::is_zero(a.at(i, c))) continue;
      t.mul(a.at(i, c), inv, factor);
      for (int j = c; j < cols_; ++j) {
        t.mul(factor, a.at(rank, j), tmp);
        for (size_t s = 0; s < tmp.size(); ++s) a.at(i, j)[s] -= tmp[s];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace liftkit
