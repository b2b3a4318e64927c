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

#include "liftkit/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace liftkit {

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) return rat_from_double_exact(j.get<double>());
  throw Error(Errc::ParseError, "expected rational literal");
}

Json matrix_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMat matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("entries") ? j["entries"] : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw Error(Errc::ParseError, "expected a 2D array of entries");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  RatMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(Errc::ParseError, "ragged matrix rows");
    for (int jj = 0; jj < c; ++jj) m(i, jj) = rat_from_json(rows[i][jj]);
  }
  return m;
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json verts = Json::array();
  for (int i = 0; i < p.num_vertices(); ++i) {
    Json v = Json::array();
    for (int t = 0; t < p.dim(); ++t) v.push_back(rat_to_json(p.vertices()(i, t)));
    verts.push_back(v);
  }
  out["vertices"] = verts;
  Json facets = Json::array();
  for (int j = 0; j < p.num_facets(); ++j) {
    Json normal = Json::array();
    for (int t = 0; t < p.dim(); ++t)
      normal.push_back(rat_to_json(p.facet_normals()(j, t)));
    facets.push_back(Json{{"normal", normal}});
  }
  out["facets"] = facets;
  if (!p.name().empty()) out["name"] = p.name();
  return out;
}

Polytope polytope_from_json(const Json& j, const std::string& name) {
  if (!j.contains("dim") || !j.contains("vertices") || !j.contains("facets"))
    throw Error(Errc::ParseError, "polytope JSON needs dim/vertices/facets");
  const int n = j["dim"].get<int>();
  const auto& jv = j["vertices"];
  RatMat verts(static_cast<int>(jv.size()), n);
  for (size_t i = 0; i < jv.size(); ++i) {
    if (static_cast<int>(jv[i].size()) != n)
      throw Error(Errc::ParseError, "vertex has wrong dimension");
    for (int t = 0; t < n; ++t)
      verts(static_cast<int>(i), t) = rat_from_json(jv[i][t]);
  }
  const auto& jf = j["facets"];
  RatMat normals(static_cast<int>(jf.size()), n);
  for (size_t f = 0; f < jf.size(); ++f) {
    const Json& normal = jf[f].is_object() ? jf[f].at("normal") : jf[f];
    if (static_cast<int>(normal.size()) != n)
      throw Error(Errc::ParseError, "facet normal has wrong dimension");
    for (int t = 0; t < n; ++t)
      normals(static_cast<int>(f), t) = rat_from_json(normal[t]);
  }
  std::string label = j.contains("name") ? j["name"].get<std::string>() : name;
  return Polytope::from_reps(PolytopeV{n, std::move(verts), label},
                             PolytopeH{n, std::move(normals)});
}

Json slack_to_json(const SlackMatrix& s) {
  Json out;
  out["rows"] = static_cast<int>(s.entries.rows());
  out["cols"] = static_cast<int>(s.entries.cols());
  out["row_labels"] = s.row_labels;
  out["col_labels"] = s.col_labels;
  out["rank"] = s.rank;
  out["entries"] = matrix_to_json(s.entries);
  return out;
}

Json nonneg_factorization_to_json(const NonnegFactorization& f) {
  Json out;
  out["k"] = f.k;
  out["A"] = matrix_to_json(f.a);
  out["B"] = matrix_to_json(f.b);
  return out;
}

NonnegFactorization nonneg_factorization_from_json(const Json& j) {
  NonnegFactorization f;
  f.k = j.at("k").get<int>();
  f.a = matrix_from_json(j.at("A"));
  f.b = matrix_from_json(j.at("B"));
  return f;
}

namespace {

Json double_matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json psd_factorization_to_json(const PsdFactorization& f) {
  Json out;
  out["k"] = f.k;
  Json rf = Json::array(), cf = Json::array();
  if (f.has_exact()) {
    for (const auto& m : f.row_exact) rf.push_back(matrix_to_json(m));
    for (const auto& m : f.col_exact) cf.push_back(matrix_to_json(m));
  } else {
    for (const auto& m : f.row_factors) rf.push_back(double_matrix_to_json(m));
    for (const auto& m : f.col_factors) cf.push_back(double_matrix_to_json(m));
  }
  out["row_factors"] = rf;
  out["col_factors"] = cf;
  return out;
}

PsdFactorization psd_factorization_from_json(const Json& j) {
  PsdFactorization f;
  f.k = j.at("k").get<int>();
  auto load = [&](const Json& arr, std::vector<Eigen::MatrixXd>& dst,
                  std::vector<RatMat>& exact_dst) {
    for (const auto& jm : arr) {
      RatMat m = matrix_from_json(jm);
      dst.push_back(to_double_matrix(m));
      exact_dst.push_back(std::move(m));
    }
  };
  load(j.at("row_factors"), f.row_factors, f.row_exact);
  load(j.at("col_factors"), f.col_factors, f.col_exact);
  return f;
}

Json polyhedral_lift_to_json(const PolyhedralLift& l) {
  Json out;
  out["k"] = l.k;
  Json eqs = Json::array();
  for (Eigen::Index r = 0; r < l.eq_coeffs.rows(); ++r) {
    Json coeffs = Json::array();
    for (int j = 0; j < l.k; ++j) coeffs.push_back(rat_to_json(l.eq_coeffs(r, j)));
    eqs.push_back(Json{{"coeffs", coeffs}, {"rhs", rat_to_json(l.eq_rhs(r))}});
  }
  out["equalities"] = eqs;
  out["recover_x"] = Json{{"matrix", matrix_to_json(l.recover_mat)},
                          {"offset", matrix_to_json(RatMat(l.recover_off.transpose()))[0]}};
  return out;
}

PolyhedralLift polyhedral_lift_from_json(const Json& j) {
  PolyhedralLift l;
  l.k = j.at("k").get<int>();
  const auto& eqs = j.at("equalities");
  l.eq_coeffs = RatMat::Zero(static_cast<int>(eqs.size()), l.k);
  l.eq_rhs = RatVec::Zero(static_cast<int>(eqs.size()));
  for (size_t r = 0; r < eqs.size(); ++r) {
    const auto& coeffs = eqs[r].at("coeffs");
    for (int jj = 0; jj < l.k; ++jj)
      l.eq_coeffs(static_cast<int>(r), jj) = rat_from_json(coeffs[jj]);
    l.eq_rhs(static_cast<int>(r)) = rat_from_json(eqs[r].at("rhs"));
  }
  const auto& rec = j.at("recover_x");
  l.recover_mat = matrix_from_json(rec.at("matrix"));
  const auto& off = rec.at("offset");
  l.recover_off = RatVec::Zero(static_cast<int>(off.size()));
  for (size_t t = 0; t < off.size(); ++t)
    l.recover_off(static_cast<int>(t)) = rat_from_json(off[t]);
  return l;
}

Json spectrahedral_lift_to_json(const SpectrahedralLift& l) {
  Json out;
  out["k"] = l.k;
  Json couplings = Json::array();
  for (size_t j = 0; j < l.col_factors.size(); ++j)
    couplings.push_back(Json{{"facet", static_cast<int>(j)},
                             {"B_j", matrix_to_json(l.col_factors[j])}});
  out["couplings"] = couplings;
  return out;
}

SpectrahedralLift spectrahedral_lift_from_json(const Json& j) {
  SpectrahedralLift l;
  l.k = j.at("k").get<int>();
  const auto& couplings = j.at("couplings");
  l.col_factors.resize(couplings.size());
  for (const auto& c : couplings) {
    int facet = c.at("facet").get<int>();
    if (facet < 0 || facet >= static_cast<int>(couplings.size()))
      throw Error(Errc::ParseError, "coupling facet index out of range");
    l.col_factors[facet] = matrix_from_json(c.at("B_j"));
  }
  return l;
}

Json cone_lift_to_json(const ConeLift& l) {
  Json out;
  out["cone"] = l.cone == Cone::Nonneg ? "nonneg" : "psd";
  out["k"] = l.k;
  Json eqs = Json::array();
  if (l.cone == Cone::Nonneg) {
    for (Eigen::Index r = 0; r < l.eq_a.rows(); ++r) {
      Json coeffs = Json::array();
      for (int jj = 0; jj < l.k; ++jj) coeffs.push_back(rat_to_json(l.eq_a(r, jj)));
      eqs.push_back(Json{{"coeffs", coeffs}, {"rhs", rat_to_json(l.eq_b(r))}});
    }
    out["equalities"] = eqs;
    out["projection"] = Json{
        {"matrix", matrix_to_json(l.proj_a)},
        {"offset", matrix_to_json(RatMat(l.proj_off.transpose()))[0]}};
  } else {
    for (size_t r = 0; r < l.eq_mats.size(); ++r)
      eqs.push_back(Json{{"matrix", matrix_to_json(l.eq_mats[r])},
                         {"rhs", rat_to_json(l.eq_b(static_cast<int>(r)))}});
    out["equalities"] = eqs;
    Json pm = Json::array();
    for (const auto& t : l.proj_mats) pm.push_back(matrix_to_json(t));
    out["projection"] = Json{
        {"matrices", pm},
        {"offset", matrix_to_json(RatMat(l.proj_off.transpose()))[0]}};
  }
  return out;
}

ConeLift cone_lift_from_json(const Json& j) {
  ConeLift l;
  std::string cone = j.at("cone").get<std::string>();
  l.cone = cone == "psd" ? Cone::Psd : Cone::Nonneg;
  l.k = j.at("k").get<int>();
  const auto& eqs = j.at("equalities");
  const auto& proj = j.at("projection");
  const auto& off = proj.at("offset");
  l.proj_off = RatVec::Zero(static_cast<int>(off.size()));
  for (size_t t = 0; t < off.size(); ++t)
    l.proj_off(static_cast<int>(t)) = rat_from_json(off[t]);
  l.eq_b = RatVec::Zero(static_cast<int>(eqs.size()));
  if (l.cone == Cone::Nonneg) {
    l.eq_a = RatMat::Zero(static_cast<int>(eqs.size()), l.k);
    for (size_t r = 0; r < eqs.size(); ++r) {
      const auto& coeffs = eqs[r].at("coeffs");
      for (int jj = 0; jj < l.k; ++jj)
        l.eq_a(static_cast<int>(r), jj) = rat_from_json(coeffs[jj]);
      l.eq_b(static_cast<int>(r)) = rat_from_json(eqs[r].at("rhs"));
    }
    l.proj_a = matrix_from_json(proj.at("matrix"));
  } else {
    for (size_t r = 0; r < eqs.size(); ++r) {
      l.eq_mats.push_back(matrix_from_json(eqs[r].at("matrix")));
      l.eq_b(static_cast<int>(r)) = rat_from_json(eqs[r].at("rhs"));
    }
    for (const auto& t : proj.at("matrices"))
      l.proj_mats.push_back(matrix_from_json(t));
  }
  return l;
}

ConeLift any_lift_from_json(const Json& j, const Polytope& p) {
  if (j.contains("cone")) return cone_lift_from_json(j);
  if (j.contains("couplings"))
    return to_cone_lift(spectrahedral_lift_from_json(j), p);
  return to_cone_lift(polyhedral_lift_from_json(j));
}

Json graph_to_json(const GraphSpec& g) {
  Json out;
  out["n"] = g.n;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a + 1, b + 1}));
  out["edges"] = edges;
  return out;
}

GraphSpec graph_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  return make_graph(n, std::move(edges));
}

GraphSpec graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'p') {
      std::string fmt;
      int m;
      ls >> fmt >> n >> m;
    } else if (tag == 'e') {
      int a, b;
      ls >> a >> b;
      edges.emplace_back(a - 1, b - 1);
    }
  }
  if (n < 0) throw Error(Errc::ParseError, "DIMACS file missing 'p' line");
  return make_graph(n, std::move(edges));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace liftkit
