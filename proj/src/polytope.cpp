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

#include "liftkit/polytope.hpp"

#include <algorithm>
#include <set>

namespace liftkit {

namespace {

RatMat translate_rows(const RatMat& pts, const RatVec& shift) {
  RatMat out = pts;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    out.row(i) -= shift.transpose();
  return out;
}

// Affine rank of a point set given as rows.
int affine_rank(const RatMat& pts) {
  if (pts.rows() <= 1) return 0;
  RatMat diffs(pts.rows() - 1, pts.cols());
  for (Eigen::Index i = 1; i < pts.rows(); ++i)
    diffs.row(i - 1) = pts.row(i) - pts.row(0);
  return rank_exact(diffs);
}

}  // namespace

IncidenceReport validate(const PolytopeV& v_rep, const PolytopeH& h_rep) {
  IncidenceReport rep;
  const int v = static_cast<int>(v_rep.vertices.rows());
  const int f = static_cast<int>(h_rep.normals.rows());
  const int n = v_rep.dim;
  rep.incidence = Eigen::MatrixXi::Zero(v, f);
  if (v_rep.dim != h_rep.dim || v_rep.vertices.cols() != n ||
      h_rep.normals.cols() != n) {
    rep.dims_match = false;
    rep.notes.push_back("dimension mismatch between representations");
    return rep;
  }

  RatMat slack(v, f);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j) {
      Rat s(1);
      for (int t = 0; t < n; ++t)
        s -= h_rep.normals(j, t) * v_rep.vertices(i, t);
      slack(i, j) = s;
      if (s < 0) rep.violations.emplace_back(i, j);
      rep.incidence(i, j) = (s == 0) ? 1 : 0;
    }

  if (affine_rank(v_rep.vertices) < n) {
    rep.full_dimensional = false;
    rep.notes.push_back("vertex set does not affinely span the space");
  }

  // A facet must carry at least n affinely independent incident vertices
  // (affine rank n-1), and duplicated normals are redundant by definition.
  std::set<std::vector<std::string>> seen_normals;
  for (int j = 0; j < f; ++j) {
    std::vector<std::string> key(n);
    for (int t = 0; t < n; ++t) key[t] = rat_str(h_rep.normals(j, t));
    if (!seen_normals.insert(key).second) {
      rep.redundant_facets.push_back(j);
      continue;
    }
    std::vector<int> tight;
    for (int i = 0; i < v; ++i)
      if (rep.incidence(i, j)) tight.push_back(i);
    if (tight.empty()) {
      rep.redundant_facets.push_back(j);
      continue;
    }
    RatMat pts(static_cast<int>(tight.size()), n);
    for (size_t t = 0; t < tight.size(); ++t)
      pts.row(static_cast<int>(t)) = v_rep.vertices.row(tight[t]);
    if (affine_rank(pts) < n - 1) rep.redundant_facets.push_back(j);
  }

  // A listed point is a vertex iff its tight facet normals span R^n.
  for (int i = 0; i < v; ++i) {
    std::vector<int> tight;
    for (int j = 0; j < f; ++j)
      if (rep.incidence(i, j)) tight.push_back(j);
    if (static_cast<int>(tight.size()) < n) {
      rep.non_extreme_vertices.push_back(i);
      continue;
    }
    RatMat normals(static_cast<int>(tight.size()), n);
    for (size_t t = 0; t < tight.size(); ++t)
      normals.row(static_cast<int>(t)) = h_rep.normals.row(tight[t]);
    if (rank_exact(normals) < n) rep.non_extreme_vertices.push_back(i);
  }

  return rep;
}

Polytope Polytope::from_reps(PolytopeV v_rep, PolytopeH h_rep) {
  IncidenceReport rep = validate(v_rep, h_rep);
  if (!rep.dims_match)
    throw Error(Errc::ShapeMismatch, "vertex/facet dimensions disagree");
  if (!rep.violations.empty())
    throw Error(Errc::ShapeMismatch,
                "vertex " + std::to_string(rep.violations[0].first) +
                    " violates facet inequality " +
                    std::to_string(rep.violations[0].second));
  if (!rep.full_dimensional)
    throw Error(Errc::NotFullDimensional,
                "vertex set of '" + v_rep.name + "' is not full-dimensional");
  if (!rep.redundant_facets.empty())
    throw Error(Errc::RedundantInequality,
                "facet column " + std::to_string(rep.redundant_facets[0]) +
                    " is not facet-defining");
  if (!rep.non_extreme_vertices.empty())
    throw Error(Errc::NonExtremePoint,
                "vertex row " + std::to_string(rep.non_extreme_vertices[0]) +
                    " is not extreme");
  Polytope p;
  p.v_ = std::move(v_rep);
  p.h_ = std::move(h_rep);
  p.translation_ = RatVec::Zero(p.v_.dim);
  p.incidence_ = std::move(rep);
  return p;
}

Polytope Polytope::from_inequalities(const RatMat& vertices, const RatMat& a,
                                     const RatVec& b, const std::string& name) {
  const int n = static_cast<int>(vertices.cols());
  const int v = static_cast<int>(vertices.rows());
  const int f = static_cast<int>(a.rows());
  if (a.cols() != n || b.size() != f)
    throw Error(Errc::ShapeMismatch, "inequality system shape mismatch");

  bool origin_interior = true;
  for (int j = 0; j < f; ++j)
    if (b(j) <= 0) origin_interior = false;

  RatVec shift = RatVec::Zero(n);
  if (!origin_interior) {
    for (int i = 0; i < v; ++i) shift += vertices.row(i).transpose();
    shift /= Rat(v);
  }
  RatMat verts = translate_rows(vertices, shift);
  RatVec offsets = b - a * shift;
  for (int j = 0; j < f; ++j)
    if (offsets(j) <= 0)
      throw Error(Errc::OriginNotInterior,
                  "facet " + std::to_string(j) +
                      " excludes the vertex centroid; input is not a valid "
                      "bounded polytope");
  RatMat normals(f, n);
  for (int j = 0; j < f; ++j) normals.row(j) = a.row(j) / offsets(j);

  PolytopeV vr{n, std::move(verts), name};
  PolytopeH hr{n, std::move(normals)};
  Polytope p = from_reps(std::move(vr), std::move(hr));
  p.translation_ = shift;
  return p;
}

SlackMatrix slack_matrix(const Polytope& p) {
  SlackMatrix s;
  const int v = p.num_vertices(), f = p.num_facets();
  s.entries = RatMat(v, f);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < f; ++j) s.entries(i, j) = p.slack(i, j);
  s.row_labels.resize(v);
  s.col_labels.resize(f);
  for (int i = 0; i < v; ++i) s.row_labels[i] = i;
  for (int j = 0; j < f; ++j) s.col_labels[j] = j;
  s.rank = rank_exact(s.entries);
  return s;
}

Polytope polar(const Polytope& p) {
  PolytopeV vr{p.dim(), p.facet_normals(), p.name() + "_polar"};
  PolytopeH hr{p.dim(), p.vertices()};
  return Polytope::from_reps(std::move(vr), std::move(hr));
}

SymbolicSlackPattern symbolic_pattern(const RatMat& entries) {
  SymbolicSlackPattern sp;
  sp.support = Eigen::MatrixXi::Zero(entries.rows(), entries.cols());
  sp.var_index =
      Eigen::MatrixXi::Constant(entries.rows(), entries.cols(), -1);
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      if (entries(i, j) != 0) {
        sp.support(i, j) = 1;
        sp.var_index(i, j) = sp.num_vars++;
      }
  return sp;
}

SymbolicSlackPattern symbolic_pattern(const SlackMatrix& s) {
  return symbolic_pattern(s.entries);
}

Polytope canonicalized(const Polytope& p) {
  const int n = p.dim();
  auto lex_rows = [n](const RatMat& m) {
    std::vector<int> idx(m.rows());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      for (int t = 0; t < n; ++t) {
        if (m(a, t) < m(b, t)) return true;
        if (m(a, t) > m(b, t)) return false;
      }
      return false;
    });
    return idx;
  };
  auto vidx = lex_rows(p.vertices());
  auto fidx = lex_rows(p.facet_normals());
  RatMat verts(p.num_vertices(), n), normals(p.num_facets(), n);
  for (size_t i = 0; i < vidx.size(); ++i)
    verts.row(static_cast<int>(i)) = p.vertices().row(vidx[i]);
  for (size_t j = 0; j < fidx.size(); ++j)
    normals.row(static_cast<int>(j)) = p.facet_normals().row(fidx[j]);
  return Polytope::from_reps(PolytopeV{n, std::move(verts), p.name()},
                             PolytopeH{n, std::move(normals)});
}

}  // namespace liftkit
