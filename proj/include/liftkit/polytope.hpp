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

#ifndef LIFTKIT_POLYTOPE_HPP
#define LIFTKIT_POLYTOPE_HPP

#include <string>
#include <vector>

#include "liftkit/error.hpp"
#include "liftkit/linalg.hpp"
#include "liftkit/rational.hpp"

namespace liftkit {

// Vertex representation: rows of `vertices` are the points of ext(P).
struct PolytopeV {
  int dim = 0;
  RatMat vertices;  // v x dim
  std::string name;
};

// Facet representation h_j(x) = 1 - <g_j, x> >= 0; rows of `normals` are g_j.
// The offset is fixed to 1, which presumes the origin is interior.
struct PolytopeH {
  int dim = 0;
  RatMat normals;  // f x dim
};

struct IncidenceReport {
  Eigen::MatrixXi incidence;  // v x f, 1 where the vertex lies on the facet
  bool dims_match = true;
  bool full_dimensional = true;
  std::vector<int> non_extreme_vertices;
  std::vector<int> redundant_facets;
  std::vector<std::pair<int, int>> violations;  // (vertex, facet) with slack < 0
  std::vector<std::string> notes;

  bool ok() const {
    return dims_match && full_dimensional && non_extreme_vertices.empty() &&
           redundant_facets.empty() && violations.empty();
  }
};

// Cross-checks the pair without throwing.
IncidenceReport validate(const PolytopeV& v_rep, const PolytopeH& h_rep);

// A validated vertex/facet pair. Vertex and facet order is preserved exactly
// as constructed; generators use the orderings documented per family.
class Polytope {
 public:
  // Throws NotFullDimensional / RedundantInequality / NonExtremePoint /
  // ShapeMismatch naming the offending row or column.
  static Polytope from_reps(PolytopeV v_rep, PolytopeH h_rep);

  // General ingestion from inequalities a_j . x <= b_j. When the origin is
  // not strictly interior (some b_j <= 0), every datum is translated by the
  // vertex centroid first; the shift is recorded. Offsets then rescale to 1.
  static Polytope from_inequalities(const RatMat& vertices, const RatMat& a,
                                    const RatVec& b, const std::string& name);

  int dim() const { return v_.dim; }
  int num_vertices() const { return static_cast<int>(v_.vertices.rows()); }
  int num_facets() const { return static_cast<int>(h_.normals.rows()); }
  const RatMat& vertices() const { return v_.vertices; }
  const RatMat& facet_normals() const { return h_.normals; }
  const PolytopeV& v_rep() const { return v_; }
  const PolytopeH& h_rep() const { return h_; }
  const std::string& name() const { return v_.name; }
  const RatVec& translation() const { return translation_; }
  const IncidenceReport& incidence() const { return incidence_; }

  Rat slack(int vertex, int facet) const {
    Rat s(1);
    for (int t = 0; t < dim(); ++t)
      s -= h_.normals(facet, t) * v_.vertices(vertex, t);
    return s;
  }

 private:
  Polytope() = default;
  PolytopeV v_;
  PolytopeH h_;
  RatVec translation_;  // original coords -> stored coords shift
  IncidenceReport incidence_;
};

struct SlackMatrix {
  RatMat entries;  // v x f
  std::vector<int> row_labels;  // vertex indices
  std::vector<int> col_labels;  // facet indices
  int rank = -1;                // exact rank, recorded at construction
};

SlackMatrix slack_matrix(const Polytope& p);

// Polar polytope: vertices become facet normals and vice versa. With the
// offset-1 normalization the polar's slack matrix is exactly the transpose.
Polytope polar(const Polytope& p);

// Symbolic slack pattern per Def 5.6-style replacement: distinct variable per
// positive entry, numbered row-major.
struct SymbolicSlackPattern {
  Eigen::MatrixXi support;    // 0/1
  Eigen::MatrixXi var_index;  // -1 off support, else 0..num_vars-1
  int num_vars = 0;
};

SymbolicSlackPattern symbolic_pattern(const SlackMatrix& s);
SymbolicSlackPattern symbolic_pattern(const RatMat& entries);

enum class Family {
  simplex,
  cube,
  crosspolytope,
  regular_hexagon,
  irregular_hexagon,
  octahedron,
  quad_pyramid,
  bisimplex,
};

const char* family_name(Family f);
Family family_from_string(const std::string& s);

// Fixture generators; throws UnsupportedDimension outside a family's range.
Polytope generate(Family family, int n);

// Octahedron with explicit vertex coordinates, opposite pairs (0,1), (2,3),
// (4,5). Facet planes are solved exactly from vertex triples.
Polytope make_octahedron(const RatMat& six_vertices, const std::string& name);

// Copy with vertices and facets sorted lexicographically by coordinates.
Polytope canonicalized(const Polytope& p);

}  // namespace liftkit

#endif  // LIFTKIT_POLYTOPE_HPP
