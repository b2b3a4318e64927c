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

#include "liftkit/minimality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liftkit {

namespace {

// Depth-first permanent count over rows; early exit past `cap` when cap >= 0.
// Collects up to `keep` witnessing permutations.
long permanent_dfs(const Eigen::MatrixXi& p, int row, unsigned used, long cap,
                   std::vector<int>& current,
                   std::vector<std::vector<int>>* out, long count) {
  const int n = static_cast<int>(p.rows());
  if (row == n) {
    if (out && static_cast<long>(out->size()) < 8) out->push_back(current);
    return count + 1;
  }
  for (int c = 0; c < n; ++c) {
    if (used & (1u << c) || !p(row, c)) continue;
    current[row] = c;
    count = permanent_dfs(p, row + 1, used | (1u << c), cap, current, out,
                          count);
    if (cap >= 0 && count > cap) return count;
  }
  return count;
}

long permanent_impl(const Eigen::MatrixXi& p, long cap,
                    std::vector<std::vector<int>>* out) {
  if (p.rows() != p.cols())
    throw Error(Errc::ShapeMismatch, "pattern must be square");
  if (p.rows() == 0) return 1;
  if (p.rows() > 20)
    throw Error(Errc::TooLarge, "pattern exceeds 20x20");
  std::vector<int> current(p.rows(), -1);
  return permanent_dfs(p, 0, 0, cap, current, out, 0);
}

// Next k-subset of {0..n-1} in lexicographic order; false when exhausted.
bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

}  // namespace

long support_permanent_count(const Eigen::MatrixXi& pattern) {
  return permanent_impl(pattern, -1, nullptr);
}

long support_permanent_count_capped(const Eigen::MatrixXi& pattern, long cap) {
  return permanent_impl(pattern, cap, nullptr);
}

TrinomialScan trinomial_obstruction(const SymbolicSlackPattern& s, int n,
                                    long max_submatrices) {
  TrinomialScan scan;
  const int v = static_cast<int>(s.support.rows());
  const int f = static_cast<int>(s.support.cols());
  const int k = n + 2;
  if (v < k || f < k) return scan;

  std::vector<int> rows = first_subset(k);
  do {
    std::vector<int> cols = first_subset(k);
    do {
      if (scan.submatrices_scanned >= max_submatrices) {
        scan.complete = false;
        return scan;
      }
      ++scan.submatrices_scanned;
      Eigen::MatrixXi sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = s.support(rows[i], cols[j]);
      long count = support_permanent_count_capped(sub, 3);
      if (count == 3) {
        MinorWitness w;
        w.rows = rows;
        w.cols = cols;
        std::vector<std::vector<int>> perms;
        w.monomial_count = permanent_impl(sub, -1, &perms);
        w.permutations = std::move(perms);
        scan.witness = std::move(w);
        return scan;
      }
    } while (next_subset(cols, f));
  } while (next_subset(rows, v));
  return scan;
}

bool two_level_test(const Polytope& p) {
  for (int j = 0; j < p.num_facets(); ++j) {
    std::set<Rat> values;
    for (int i = 0; i < p.num_vertices(); ++i) {
      Rat dot(0);
      for (int t = 0; t < p.dim(); ++t)
        dot += p.facet_normals()(j, t) * p.vertices()(i, t);
      values.insert(dot);
      if (values.size() > 2) return false;
    }
  }
  return true;
}

const char* three_class_name(ThreePolytopeClass c) {
  switch (c) {
    case ThreePolytopeClass::Simplex: return "Simplex";
    case ThreePolytopeClass::QuadPyramid: return "QuadPyramid";
    case ThreePolytopeClass::Bisimplex: return "Bisimplex";
    case ThreePolytopeClass::Octahedron: return "Octahedron";
    case ThreePolytopeClass::DualOfAbove: return "DualOfAbove";
    case ThreePolytopeClass::NotMinimalClass: return "NotMinimalClass";
  }
  return "?";
}

bool biplanar_test(const Polytope& p) {
  if (p.num_vertices() != 6)
    throw Error(Errc::NotOctahedron, "biplanar test needs six vertices");
  const RatMat& v = p.vertices();
  std::set<std::vector<std::string>> planes;
  std::vector<int> quad = first_subset(4);
  do {
    RatMat hom(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int t = 0; t < 3; ++t) hom(i, t) = v(quad[i], t);
      hom(i, 3) = 1;
    }
    if (rank_exact(hom) == 3) {
      // Plane through the four points: nullspace of the 4x4 homogeneous
      // system has dimension 1 exactly when they span a plane.
      RatMat plane_basis = nullspace(hom);
      if (plane_basis.cols() != 1) continue;
      RatVec pl = plane_basis.col(0);
      // Normalize: first nonzero coordinate = 1.
      for (int t = 0; t < 4; ++t)
        if (pl(t) != 0) {
          pl /= pl(t);
          break;
        }
      std::vector<std::string> key;
      for (int t = 0; t < 4; ++t) key.push_back(rat_str(pl(t)));
      // Make sure no fifth vertex lies on this plane ("exactly four").
      int on_plane = 0;
      for (int i = 0; i < 6; ++i) {
        Rat val = pl(3);
        for (int t = 0; t < 3; ++t) val += pl(t) * v(i, t);
        if (val == 0) ++on_plane;
      }
      if (on_plane == 4) planes.insert(key);
    }
  } while (next_subset(quad, 6));
  return planes.size() >= 2;
}

Classification3 classify_3polytope(const Polytope& p) {
  if (p.dim() != 3)
    throw Error(Errc::WrongDimension, "classification needs a 3-polytope");
  Classification3 out;
  const int v = p.num_vertices(), f = p.num_facets();
  const Eigen::MatrixXi& inc = p.incidence().incidence;

  std::vector<int> degree(v, 0), size(f, 0);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j)
      if (inc(i, j)) {
        ++degree[i];
        ++size[j];
      }
  int max_deg = *std::max_element(degree.begin(), degree.end());
  int max_size = *std::max_element(size.begin(), size.end());
  if (max_deg > 4 || max_size > 4) {
    out.cls = ThreePolytopeClass::NotMinimalClass;
    out.detail = max_deg > 4 ? "vertex of degree > 4" : "facet with > 4 vertices";
    return out;
  }
  // Quadrilateral facet meeting a degree-4 vertex forces a trinomial 5-minor.
  for (int i = 0; i < v; ++i)
    if (degree[i] == 4)
      for (int j = 0; j < f; ++j)
        if (inc(i, j) && size[j] == 4) {
          out.cls = ThreePolytopeClass::NotMinimalClass;
          out.detail = "quadrilateral facet at a degree-4 vertex";
          return out;
        }

  std::multiset<int> degs(degree.begin(), degree.end());
  std::multiset<int> sizes(size.begin(), size.end());
  auto ms = [](std::initializer_list<int> ls) {
    return std::multiset<int>(ls);
  };

  if (v == 4 && f == 4) {
    out.cls = ThreePolytopeClass::Simplex;
  } else if (v == 5 && f == 5 && degs == ms({3, 3, 3, 3, 4}) &&
             sizes == ms({3, 3, 3, 3, 4})) {
    out.cls = ThreePolytopeClass::QuadPyramid;
  } else if (v == 5 && f == 6 && degs == ms({3, 3, 4, 4, 4}) &&
             sizes == ms({3, 3, 3, 3, 3, 3})) {
    out.cls = ThreePolytopeClass::Bisimplex;
  } else if (v == 6 && f == 8 && degs == ms({4, 4, 4, 4, 4, 4}) &&
             sizes == ms({3, 3, 3, 3, 3, 3, 3, 3})) {
    out.cls = ThreePolytopeClass::Octahedron;
    out.biplanar = biplanar_test(p);
  } else if (v == 6 && f == 5 && degs == ms({3, 3, 3, 3, 3, 3}) &&
             sizes == ms({3, 3, 4, 4, 4})) {
    out.cls = ThreePolytopeClass::DualOfAbove;  // triangular prism
    out.detail = "prism (bisimplex polar)";
  } else if (v == 8 && f == 6 && degs == ms({3, 3, 3, 3, 3, 3, 3, 3}) &&
             sizes == ms({4, 4, 4, 4, 4, 4})) {
    out.cls = ThreePolytopeClass::DualOfAbove;  // combinatorial cube
    out.detail = "cube (octahedron polar)";
  } else {
    out.cls = ThreePolytopeClass::NotMinimalClass;
    out.detail = "combinatorics outside the psd-minimal classes";
  }
  return out;
}

}  // namespace liftkit
