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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <random>

#include "liftkit/json_io.hpp"
#include "liftkit/minimality.hpp"
#include "liftkit/nonneg_search.hpp"
#include "liftkit/psd_bounds.hpp"
#include "liftkit/sqrt_rank.hpp"
#include "liftkit/theta.hpp"

namespace {

using namespace liftkit;

constexpr const char* kSchema = "liftkit/1";

// Fixed 12-significant-digit float formatting keeps reports byte-identical.
Json num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return Json::parse(buf);
}

Json load_json(const std::string& path) {
  return Json::parse(read_input(path));
}

Polytope load_polytope(const std::string& path) {
  return polytope_from_json(load_json(path));
}

RatMat load_matrix(const std::string& path) {
  Json j = load_json(path);
  if (j.is_object() && j.contains("entries") && j.contains("rank"))
    return matrix_from_json(j["entries"]);  // slack report reuse
  return matrix_from_json(j);
}

GraphSpec load_graph(const std::string& path) {
  std::string text = read_input(path);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(Json::parse(text));
    break;
  }
  return graph_from_dimacs(text);
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json budget_json(const SearchBudget& b) {
  return Json{{"max_patterns", b.max_patterns},
              {"max_iterations", b.max_iterations},
              {"time_cap_seconds", num(b.time_cap_seconds)}};
}

int run(int argc, char** argv) {
  CLI::App app{"cone lifts of polytopes: slack matrices, factorizations, "
               "lifts, psd-minimality, theta bodies"};
  app.require_subcommand(1);

  SearchBudget budget;
  double tol = 1e-7;

  // generate <family> <n>
  auto* gen = app.add_subcommand("generate", "emit a fixture polytope");
  std::string gen_family;
  int gen_n = 2;
  gen->add_option("family", gen_family, "polytope family")->required();
  gen->add_option("n", gen_n, "dimension")->required();

  // slack <polytope>
  auto* slack_cmd = app.add_subcommand("slack", "slack matrix of a polytope");
  std::string slack_in;
  slack_cmd->add_option("polytope", slack_in, "polytope JSON ('-' = stdin)")
      ->required();

  // polar <polytope>
  auto* polar_cmd = app.add_subcommand("polar", "polar polytope");
  std::string polar_in;
  polar_cmd->add_option("polytope", polar_in)->required();

  // bounds <polytope|matrix>
  auto* bounds_cmd = app.add_subcommand("bounds", "psd rank bound report");
  std::string bounds_in;
  double bounds_degree = 0;
  bounds_cmd->add_option("input", bounds_in, "polytope or matrix JSON")
      ->required();
  bounds_cmd->add_option("--degree", bounds_degree,
                         "algebraic degree of the polar boundary");

  // factorize --cone nonneg|psd --k K <matrix>
  auto* fact_cmd = app.add_subcommand("factorize", "search a factorization");
  std::string fact_cone = "nonneg", fact_in;
  int fact_k = 0;
  fact_cmd->add_option("--cone", fact_cone)->check(CLI::IsMember({"nonneg", "psd"}));
  fact_cmd->add_option("--k", fact_k, "cone dimension")->required();
  fact_cmd->add_option("matrix", fact_in)->required();
  fact_cmd->add_option("--max-patterns", budget.max_patterns);
  fact_cmd->add_option("--max-iterations", budget.max_iterations);
  fact_cmd->add_option("--time-cap", budget.time_cap_seconds);

  // verify-fac [--cone c] [--tol t] <matrix> <factorization>
  auto* vfac_cmd = app.add_subcommand("verify-fac", "verify a factorization");
  std::string vfac_cone = "nonneg", vfac_m, vfac_f;
  double vfac_tol = 0;
  vfac_cmd->add_option("--cone", vfac_cone)
      ->check(CLI::IsMember({"nonneg", "psd"}));
  vfac_cmd->add_option("--tol", vfac_tol,
                       "absolute tolerance (0 = exact, nonneg cone only)");
  vfac_cmd->add_option("matrix", vfac_m)->required();
  vfac_cmd->add_option("factorization", vfac_f)->required();

  // lift build|verify|extract
  auto* lift_cmd = app.add_subcommand("lift", "build, verify or extract lifts");
  lift_cmd->require_subcommand(1);
  auto* lb = lift_cmd->add_subcommand("build", "factorization -> lift");
  std::string lb_cone = "nonneg", lb_poly, lb_fac;
  lb->add_option("--cone", lb_cone)->check(CLI::IsMember({"nonneg", "psd"}));
  lb->add_option("polytope", lb_poly)->required();
  lb->add_option("factorization", lb_fac)->required();
  auto* lv = lift_cmd->add_subcommand("verify", "check projection onto the polytope");
  std::string lv_poly, lv_lift;
  double lv_tol = 1e-6;
  bool lv_float = false;
  lv->add_option("polytope", lv_poly)->required();
  lv->add_option("lift", lv_lift)->required();
  lv->add_option("--tol", lv_tol);
  lv->add_flag("--float", lv_float, "use the interior point LP instead of exact simplex");
  auto* le = lift_cmd->add_subcommand("extract", "lift -> factorization");
  std::string le_poly, le_lift;
  double le_tol = 1e-6;
  le->add_option("polytope", le_poly)->required();
  le->add_option("lift", le_lift)->required();
  le->add_option("--tol", le_tol);

  // minimality <polytope>
  auto* min_cmd = app.add_subcommand("minimality", "psd-minimality certificate");
  std::string min_in;
  min_cmd->add_option("polytope", min_in)->required();
  min_cmd->add_option("--max-patterns", budget.max_patterns);

  // obstruction <polytope>
  auto* obs_cmd = app.add_subcommand("obstruction", "trinomial minor scan");
  std::string obs_in;
  obs_cmd->add_option("polytope", obs_in)->required();

  // classify3 <polytope>
  auto* cls_cmd = app.add_subcommand("classify3", "3-polytope classification");
  std::string cls_in;
  cls_cmd->add_option("polytope", cls_in)->required();

  // theta member|opt|probe <graph>
  auto* theta_cmd = app.add_subcommand("theta", "stable set theta body");
  theta_cmd->require_subcommand(1);
  auto* tm = theta_cmd->add_subcommand("member", "TH(G) membership");
  std::string tm_graph, tm_point;
  tm->add_option("graph", tm_graph)->required();
  tm->add_option("--point", tm_point, "comma-separated coordinates")->required();
  tm->add_option("--tol", tol);
  auto* to = theta_cmd->add_subcommand("opt", "maximize over TH(G)");
  std::string to_graph, to_dir = "ones";
  to->add_option("graph", to_graph)->required();
  to->add_option("--direction", to_dir, "'ones' or comma-separated");
  auto* tp = theta_cmd->add_subcommand("probe", "perfection probe");
  std::string tp_graph;
  int tp_random = 0;
  unsigned tp_seed = 1;
  tp->add_option("graph", tp_graph)->required();
  tp->add_option("--random", tp_random, "extra random directions");
  tp->add_option("--seed", tp_seed, "seed for random directions");

  // thk <generator> --k K --point x0
  auto* thk_cmd = app.add_subcommand("thk", "univariate theta body membership");
  std::string thk_gen;
  int thk_k = 1;
  double thk_x0 = 0;
  thk_cmd->add_option("generator", thk_gen, "e.g. 'x^4 - x^3 - x^2 + x'")
      ->required();
  thk_cmd->add_option("--k", thk_k)->required();
  thk_cmd->add_option("--point", thk_x0)->required();
  thk_cmd->add_option("--tol", tol);

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    Polytope p = generate(family_from_string(gen_family), gen_n);
    emit(polytope_to_json(p));
    return 0;
  }

  if (*slack_cmd) {
    Json rep = slack_to_json(slack_matrix(load_polytope(slack_in)));
    rep["schema"] = kSchema;
    emit(rep);
    return 0;
  }

  if (*polar_cmd) {
    emit(polytope_to_json(polar(load_polytope(polar_in))));
    return 0;
  }

  if (*bounds_cmd) {
    Json j = load_json(bounds_in);
    RatMat m;
    std::optional<PolytopeContext> ctx;
    if (j.is_object() && j.contains("vertices")) {
      Polytope p = polytope_from_json(j);
      m = slack_matrix(p).entries;
      PolytopeContext c;
      c.n = p.dim();
      c.v = p.num_vertices();
      c.f = p.num_facets();
      if (bounds_degree >= 1) c.algebraic_degree = bounds_degree;
      ctx = c;
    } else {
      m = matrix_from_json(j);
      if (bounds_degree >= 1) {
        PolytopeContext c;
        c.algebraic_degree = bounds_degree;
        ctx = c;
      }
    }
    PsdRankBoundReport rep = psd_rank_bounds(m, ctx);
    Json out{{"schema", kSchema},
             {"matrix_rank", rep.matrix_rank},
             {"rank_formula_lb", rep.rank_formula_lb},
             {"upper_bound", rep.upper_bound},
             {"log_base", rep.log_base}};
    if (rep.polytope_dim_lb) out["polytope_dim_lb"] = *rep.polytope_dim_lb;
    if (rep.dimension_lb) out["dimension_lb"] = *rep.dimension_lb;
    if (rep.degree_lb) out["degree_lb"] = *rep.degree_lb;
    if (rep.linear_ext_lb) out["linear_ext_lb"] = *rep.linear_ext_lb;
    emit(out);
    return 0;
  }

  if (*fact_cmd) {
    RatMat m = load_matrix(fact_in);
    if (fact_cone == "nonneg") {
      NonnegSearchResult res = search_nonneg_factorization(m, fact_k, budget);
      Json out{{"schema", kSchema},
               {"cone", "nonneg"},
               {"k", fact_k},
               {"status", search_status_name(res.status)},
               {"budget", budget_json(budget)},
               {"enumeration",
                Json{{"rectangles", res.log.rectangles},
                     {"covers_examined", res.log.covers_examined},
                     {"covers_refuted", res.log.covers_refuted},
                     {"covers_undecided", res.log.covers_undecided},
                     {"smaller_covers", res.log.smaller_covers},
                     {"nodes", res.log.nodes},
                     {"complete", res.log.enumeration_complete},
                     {"note", res.log.note}}}};
      if (res.factorization)
        out["factorization"] = nonneg_factorization_to_json(*res.factorization);
      emit(out);
      return res.status == SearchStatus::Found ? 0 : 1;
    }
    // psd route: rank-one construction from a sqrt-rank certificate.
    SqrtRankResult sr = sqrt_rank(m, budget);
    Json out{{"schema", kSchema},
             {"cone", "psd"},
             {"k", fact_k},
             {"sqrt_rank", sr.rank},
             {"sqrt_scan_complete", sr.complete},
             {"exact_arithmetic", sr.exact_arithmetic},
             {"budget", budget_json(budget)}};
    if (sr.rank <= fact_k) {
      PsdFactorization fac = psd_from_sqrt(m, sr.certificate);
      if (fac.k < fact_k) {
        // Pad factors to the requested size.
        for (auto& f : fac.row_factors) {
          Eigen::MatrixXd g = Eigen::MatrixXd::Zero(fact_k, fact_k);
          g.topLeftCorner(fac.k, fac.k) = f;
          f = g;
        }
        for (auto& f : fac.col_factors) {
          Eigen::MatrixXd g = Eigen::MatrixXd::Zero(fact_k, fact_k);
          g.topLeftCorner(fac.k, fac.k) = f;
          f = g;
        }
        fac.k = fact_k;
      }
      out["status"] = "Found";
      out["factorization"] = psd_factorization_to_json(fac);
      emit(out);
      return 0;
    }
    out["status"] = "Unknown";
    out["note"] = "no rank-one construction at this size; psd search beyond "
                  "sqrt certificates is out of scope";
    emit(out);
    return 1;
  }

  if (*vfac_cmd) {
    RatMat m = load_matrix(vfac_m);
    Json jf = load_json(vfac_f);
    bool ok;
    if (vfac_cone == "nonneg") {
      NonnegFactorization fac = nonneg_factorization_from_json(jf);
      ok = vfac_tol > 0
               ? verify_nonneg_factorization(to_double_matrix(m), fac, vfac_tol)
               : verify_nonneg_factorization(m, fac);
    } else {
      if (vfac_tol <= 0) vfac_tol = 1e-7;
      PsdFactorization fac = psd_factorization_from_json(jf);
      ok = verify_psd_factorization(to_double_matrix(m), fac, vfac_tol);
    }
    emit(Json{{"schema", kSchema},
              {"cone", vfac_cone},
              {"tol", num(vfac_tol)},
              {"verdict", ok}});
    return ok ? 0 : 1;
  }

  if (*lb) {
    Polytope p = load_polytope(lb_poly);
    Json jf = load_json(lb_fac);
    if (lb_cone == "nonneg") {
      PolyhedralLift lift =
          build_polyhedral_lift(p, nonneg_factorization_from_json(jf));
      Json out = polyhedral_lift_to_json(lift);
      out["schema"] = kSchema;
      emit(out);
    } else {
      SpectrahedralLift lift =
          build_psd_lift(p, psd_factorization_from_json(jf), 1e-7);
      Json out = spectrahedral_lift_to_json(lift);
      out["schema"] = kSchema;
      emit(out);
    }
    return 0;
  }

  if (*lv) {
    Polytope p = load_polytope(lv_poly);
    ConeLift lift = any_lift_from_json(load_json(lv_lift), p);
    LiftVerification ver = verify_lift(p, lift, lv_tol, !lv_float);
    Json verts = Json::array();
    for (bool okv : ver.vertex_feasible) verts.push_back(okv);
    Json supports = Json::array();
    if (ver.exact && !ver.facet_support_exact.empty())
      for (const Rat& v : ver.facet_support_exact)
        supports.push_back(rat_to_json(v));
    else
      for (double v : ver.facet_support_values) supports.push_back(num(v));
    emit(Json{{"schema", kSchema},
              {"verdict", ver.verdict},
              {"exact", ver.exact},
              {"tol", num(lv_tol)},
              {"vertex_feasible", verts},
              {"facet_support_values", supports}});
    return ver.verdict ? 0 : 1;
  }

  if (*le) {
    Polytope p = load_polytope(le_poly);
    ConeLift lift = any_lift_from_json(load_json(le_lift), p);
    ExtractedFactorization ext = lift_to_factorization(p, lift, le_tol);
    Json out{{"schema", kSchema}, {"tol", num(le_tol)}};
    if (ext.nonneg) {
      out["cone"] = "nonneg";
      out["factorization"] = nonneg_factorization_to_json(*ext.nonneg);
    } else {
      out["cone"] = "psd";
      out["factorization"] = psd_factorization_to_json(*ext.psd);
    }
    emit(out);
    return 0;
  }

  if (*min_cmd) {
    Polytope p = load_polytope(min_in);
    PsdMinimalityResult res = psd_minimality_test(p, budget);
    Json out{{"schema", kSchema},
             {"verdict", minimality_verdict_name(res.verdict)},
             {"reason", res.reason},
             {"sqrt_scan_complete", res.sqrt_scan_complete},
             {"budget", budget_json(budget)}};
    if (res.sqrt_rank_value) out["sqrt_rank"] = *res.sqrt_rank_value;
    if (res.certificate) {
      Json signs = Json::array();
      for (int i = 0; i < res.certificate->sign_matrix.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < res.certificate->sign_matrix.cols(); ++j)
          row.push_back(res.certificate->sign_matrix(i, j));
        signs.push_back(row);
      }
      out["certificate"] = Json{{"rank", res.certificate->achieved_rank},
                                {"exact", res.certificate->exact},
                                {"signs", signs}};
    }
    emit(out);
    return res.verdict == MinimalityVerdict::Minimal ? 0 : 1;
  }

  if (*obs_cmd) {
    Polytope p = load_polytope(obs_in);
    SlackMatrix s = slack_matrix(p);
    TrinomialScan scan = trinomial_obstruction(symbolic_pattern(s), p.dim());
    Json out{{"schema", kSchema},
             {"two_level", two_level_test(p)},
             {"scan_complete", scan.complete},
             {"submatrices_scanned", scan.submatrices_scanned}};
    if (scan.witness) {
      out["obstruction"] = Json{{"rows", scan.witness->rows},
                                {"cols", scan.witness->cols},
                                {"monomials", scan.witness->monomial_count}};
    } else {
      out["obstruction"] = nullptr;
    }
    if (p.dim() == 3) {
      Classification3 cls = classify_3polytope(p);
      out["class"] = three_class_name(cls.cls);
      if (cls.biplanar) out["biplanar"] = *cls.biplanar;
    }
    emit(out);
    return 0;
  }

  if (*cls_cmd) {
    Polytope p = load_polytope(cls_in);
    Classification3 cls = classify_3polytope(p);
    Json out{{"schema", kSchema},
             {"class", three_class_name(cls.cls)},
             {"detail", cls.detail}};
    if (cls.biplanar) out["biplanar"] = *cls.biplanar;
    emit(out);
    return 0;
  }

  auto parse_vector = [](const std::string& text, int n) {
    Eigen::VectorXd v(n);
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < n) v(i++) = std::stod(item);
    if (i != n)
      throw Error(Errc::ParseError, "expected " + std::to_string(n) +
                                        " comma-separated coordinates");
    return v;
  };

  if (*tm) {
    GraphSpec g = load_graph(tm_graph);
    Eigen::VectorXd x = parse_vector(tm_point, g.n);
    MembershipResult res = th1_membership(g, x, tol);
    emit(Json{{"schema", kSchema},
              {"member", res.member},
              {"boundary", res.boundary},
              {"slack", num(res.slack)},
              {"tol", num(tol)}});
    return res.member ? 0 : 1;
  }

  if (*to) {
    GraphSpec g = load_graph(to_graph);
    Eigen::VectorXd c = to_dir == "ones" ? Eigen::VectorXd::Ones(g.n)
                                         : parse_vector(to_dir, g.n);
    double value = th1_optimize(g, c);
    emit(Json{{"schema", kSchema},
              {"value", num(value)},
              {"direction", to_dir}});
    return 0;
  }

  if (*tp) {
    GraphSpec g = load_graph(tp_graph);
    std::vector<Eigen::VectorXd> dirs;
    for (int i = 0; i < g.n; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(g.n);
      e(i) = 1;
      dirs.push_back(e);
    }
    dirs.push_back(Eigen::VectorXd::Ones(g.n));
    std::mt19937 rng(tp_seed);
    std::normal_distribution<double> gauss;
    for (int r = 0; r < tp_random; ++r) {
      Eigen::VectorXd v(g.n);
      for (int i = 0; i < g.n; ++i) v(i) = std::fabs(gauss(rng));
      dirs.push_back(v);
    }
    PerfectionProbe probe = perfection_probe(g, dirs);
    Json gaps = Json::array();
    for (size_t i = 0; i < probe.gaps.size(); ++i)
      gaps.push_back(Json{{"relaxation", num(probe.relaxation_values[i])},
                          {"stable_set", num(probe.stable_set_values[i])},
                          {"gap", num(probe.gaps[i])}});
    emit(Json{{"schema", kSchema},
              {"seed", tp_seed},
              {"directions", gaps},
              {"max_gap", num(probe.max_gap)}});
    return 0;
  }

  if (*thk_cmd) {
    UnivariateIdeal ideal{poly_from_string(thk_gen)};
    MembershipResult res = univariate_thk_membership(ideal, thk_k, thk_x0, tol);
    emit(Json{{"schema", kSchema},
              {"generator", poly_to_string(ideal.generator)},
              {"k", thk_k},
              {"point", num(thk_x0)},
              {"member", res.member},
              {"boundary", res.boundary},
              {"slack", num(res.slack)},
              {"tol", num(tol)}});
    return res.member ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const liftkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
