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

#include <array>

#include "liftkit/polytope.hpp"

namespace liftkit {

namespace {

// 2D polygon from vertices in cyclic order, centroid-centered; facet j is the
// edge {v_{j-1}, v_j} so vertex i lies on facets i and i+1 (1-based, cyclic).
Polytope polygon_from_cycle(const RatMat& verts, const std::string& name) {
  const int v = static_cast<int>(verts.rows());
  RatMat a(v, 2);
  RatVec b(v);
  for (int j = 0; j < v; ++j) {
    int p = (j + v - 1) % v, q = j;
    Rat ux = verts(q, 0) - verts(p, 0);
    Rat uy = verts(q, 1) - verts(p, 1);
    Rat ax = -uy, ay = ux;  // rotate edge direction by 90 degrees
    Rat beta = ax * verts(p, 0) + ay * verts(p, 1);
    if (beta < 0) {
      ax = -ax;
      ay = -ay;
      beta = -beta;
    }
    a(j, 0) = ax;
    a(j, 1) = ay;
    b(j) = beta;
  }
  // Force centroid centering regardless of where the origin sits.
  RatVec c = RatVec::Zero(2);
  for (int i = 0; i < v; ++i) c += verts.row(i).transpose();
  c /= Rat(v);
  RatMat shifted = verts;
  for (int i = 0; i < v; ++i) shifted.row(i) -= c.transpose();
  RatVec b2 = b - a * c;
  return Polytope::from_inequalities(shifted, a, b2, name);
}

Polytope make_simplex(int n) {
  RatMat verts(n + 1, n);
  Rat c(1, n + 1);
  for (int j = 0; j < n; ++j) verts(0, j) = -c;  // origin - centroid
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) verts(i, j) = (j == i - 1 ? Rat(1) - c : -c);
  RatMat normals(n + 1, n);
  normals.setZero();
  for (int j = 0; j < n; ++j) normals(j, j) = -Rat(n + 1);
  for (int j = 0; j < n; ++j) normals(n, j) = Rat(n + 1);
  return Polytope::from_reps(PolytopeV{n, verts, "simplex_" + std::to_string(n)},
                             PolytopeH{n, normals});
}

Polytope make_cube(int n) {
  const int v = 1 << n;
  RatMat verts(v, n);
  for (int idx = 0; idx < v; ++idx)
    for (int j = 0; j < n; ++j)
      verts(idx, j) = (idx >> j & 1) ? Rat(-1) : Rat(1);
  RatMat normals(2 * n, n);
  normals.setZero();
  for (int j = 0; j < n; ++j) {
    normals(j, j) = 1;
    normals(n + j, j) = -1;
  }
  return Polytope::from_reps(PolytopeV{n, verts, "cube_" + std::to_string(n)},
                             PolytopeH{n, normals});
}

Polytope make_crosspolytope(int n, const std::string& name) {
  RatMat verts(2 * n, n);
  verts.setZero();
  for (int j = 0; j < n; ++j) {
    verts(j, j) = 1;
    verts(n + j, j) = -1;
  }
  const int f = 1 << n;
  RatMat normals(f, n);
  for (int idx = 0; idx < f; ++idx)
    for (int j = 0; j < n; ++j)
      normals(idx, j) = (idx >> j & 1) ? Rat(-1) : Rat(1);
  return Polytope::from_reps(PolytopeV{n, verts, name}, PolytopeH{n, normals});
}

// The regular hexagon in rational coordinates: the paper's hexagon carries
// sqrt(3)'s, but slacks are invariant under a simultaneous linear change of
// coordinates, and scaling the second coordinate by 1/sqrt(3) makes every
// vertex and facet normal rational while keeping the slack matrix S_H.
Polytope make_regular_hexagon() {
  RatMat verts(6, 2);
  verts << Rat(1, 2), Rat(1, 2),
           Rat(-1, 2), Rat(1, 2),
           Rat(-1), Rat(0),
           Rat(-1, 2), Rat(-1, 2),
           Rat(1, 2), Rat(-1, 2),
           Rat(1), Rat(0);
  RatMat normals(6, 2);
  normals << Rat(1), Rat(1),
             Rat(0), Rat(2),
             Rat(-1), Rat(1),
             Rat(-1), Rat(-1),
             Rat(0), Rat(-2),
             Rat(1), Rat(-1);
  return Polytope::from_reps(PolytopeV{2, verts, "regular_hexagon"},
                             PolytopeH{2, normals});
}

Polytope make_irregular_hexagon() {
  RatMat verts(6, 2);
  verts << Rat(0), Rat(-1),
           Rat(1), Rat(-1),
           Rat(2), Rat(0),
           Rat(1), Rat(3),
           Rat(0), Rat(2),
           Rat(-1), Rat(0);
  return polygon_from_cycle(verts, "irregular_hexagon");
}

Polytope make_quad_pyramid() {
  RatMat verts(5, 3);
  verts << Rat(1), Rat(1), Rat(0),
           Rat(-1), Rat(1), Rat(0),
           Rat(-1), Rat(-1), Rat(0),
           Rat(1), Rat(-1), Rat(0),
           Rat(0), Rat(0), Rat(1);
  RatMat a(5, 3);
  RatVec b(5);
  a << Rat(0), Rat(0), Rat(-1),   // base
       Rat(0), Rat(1), Rat(1),    // edge v1v2 side
       Rat(-1), Rat(0), Rat(1),   // edge v2v3 side
       Rat(0), Rat(-1), Rat(1),   // edge v3v4 side
       Rat(1), Rat(0), Rat(1);    // edge v4v1 side
  b << Rat(0), Rat(1), Rat(1), Rat(1), Rat(1);
  return Polytope::from_inequalities(verts, a, b, "quad_pyramid");
}

Polytope make_bisimplex() {
  RatMat verts(5, 3);
  verts << Rat(1), Rat(0), Rat(0),
           Rat(0), Rat(1), Rat(0),
           Rat(-1), Rat(-1), Rat(0),
           Rat(0), Rat(0), Rat(1),
           Rat(0), Rat(0), Rat(-1);
  RatMat normals(6, 3);
  normals << Rat(1), Rat(1), Rat(1),
             Rat(-2), Rat(1), Rat(1),
             Rat(1), Rat(-2), Rat(1),
             Rat(1), Rat(1), Rat(-1),
             Rat(-2), Rat(1), Rat(-1),
             Rat(1), Rat(-2), Rat(-1);
  return Polytope::from_reps(PolytopeV{3, verts, "bisimplex"},
                             PolytopeH{3, normals});
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::simplex: return "simplex";
    case Family::cube: return "cube";
    case Family::crosspolytope: return "crosspolytope";
    case Family::regular_hexagon: return "regular_hexagon";
    case Family::irregular_hexagon: return "irregular_hexagon";
    case Family::octahedron: return "octahedron";
    case Family::quad_pyramid: return "quad_pyramid";
    case Family::bisimplex: return "bisimplex";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::simplex, Family::cube, Family::crosspolytope,
                   Family::regular_hexagon, Family::irregular_hexagon,
                   Family::octahedron, Family::quad_pyramid, Family::bisimplex})
    if (s == family_name(f)) return f;
  throw Error(Errc::ParseError, "unknown polytope family '" + s + "'");
}

Polytope generate(Family family, int n) {
  auto require_dim = [&](int want) {
    if (n != want)
      throw Error(Errc::UnsupportedDimension,
                  std::string(family_name(family)) + " requires n = " +
                      std::to_string(want));
  };
  switch (family) {
    case Family::simplex:
      if (n < 1 || n > 12)
        throw Error(Errc::UnsupportedDimension, "simplex supports 1 <= n <= 12");
      return make_simplex(n);
    case Family::cube:
      if (n < 1 || n > 10)
        throw Error(Errc::UnsupportedDimension, "cube supports 1 <= n <= 10");
      return make_cube(n);
    case Family::crosspolytope:
      if (n < 1 || n > 10)
        throw Error(Errc::UnsupportedDimension,
                    "crosspolytope supports 1 <= n <= 10");
      return make_crosspolytope(n, "crosspolytope_" + std::to_string(n));
    case Family::regular_hexagon:
      require_dim(2);
      return make_regular_hexagon();
    case Family::irregular_hexagon:
      require_dim(2);
      return make_irregular_hexagon();
    case Family::octahedron:
      require_dim(3);
      return make_crosspolytope(3, "octahedron");
    case Family::quad_pyramid:
      require_dim(3);
      return make_quad_pyramid();
    case Family::bisimplex:
      require_dim(3);
      return make_bisimplex();
  }
  throw Error(Errc::UnsupportedDimension, "unreachable family");
}

Polytope make_octahedron(const RatMat& six_vertices, const std::string& name) {
  if (six_vertices.rows() != 6 || six_vertices.cols() != 3)
    throw Error(Errc::NotOctahedron, "expected six vertices in R^3");
  // Opposite pairs (0,1), (2,3), (4,5); one facet per choice of a vertex
  // from each pair.
  RatMat a(8, 3);
  RatVec b(8);
  int row = 0;
  for (int i : {0, 1})
    for (int j : {2, 3})
      for (int k : {4, 5}) {
        RatMat hom(3, 4);
        for (int t = 0; t < 3; ++t) {
          hom(0, t) = six_vertices(i, t);
          hom(1, t) = six_vertices(j, t);
          hom(2, t) = six_vertices(k, t);
        }
        hom(0, 3) = hom(1, 3) = hom(2, 3) = -1;
        RatMat ns = nullspace(hom);
        if (ns.cols() != 1)
          throw Error(Errc::NotOctahedron,
                      "facet triple is affinely degenerate");
        RatVec plane = ns.col(0);  // (normal, offset)
        // Orient so the opposite triple lies strictly inside.
        Rat test = six_vertices(1 - i, 0) * plane(0) +
                   six_vertices(1 - i, 1) * plane(1) +
                   six_vertices(1 - i, 2) * plane(2) - plane(3);
        if (test > 0) plane = -plane;
        a.row(row) << plane(0), plane(1), plane(2);
        b(row) = plane(3);
        ++row;
      }
  return Polytope::from_inequalities(six_vertices, a, b, name);
}

}  // namespace liftkit
