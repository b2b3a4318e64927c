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

#include "liftkit/theta.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "liftkit/error.hpp"

namespace liftkit {

GraphSpec make_graph(int n, std::vector<std::pair<int, int>> edges) {
  GraphSpec g;
  g.n = n;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw Error(Errc::ParseError, "loop edge rejected");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n)
      throw Error(Errc::ParseError, "edge endpoint out of range");
    if (seen.insert({a, b}).second) g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Eigen::VectorXi> stab_enumerate(const GraphSpec& g) {
  if (g.n > 20) throw Error(Errc::TooLarge, "stable-set enumeration needs n <= 20");
  std::vector<Eigen::VectorXi> out;
  for (unsigned s = 0; s < (1u << g.n); ++s) {
    bool stable = true;
    for (auto [a, b] : g.edges)
      if ((s >> a & 1) && (s >> b & 1)) {
        stable = false;
        break;
      }
    if (!stable) continue;
    Eigen::VectorXi x(g.n);
    for (int i = 0; i < g.n; ++i) x(i) = (s >> i & 1) ? 1 : 0;
    out.push_back(x);
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> non_edges(const GraphSpec& g) {
  std::set<std::pair<int, int>> e(g.edges.begin(), g.edges.end());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!e.count({i, j})) out.emplace_back(i, j);
  return out;
}

Eigen::MatrixXd pair_matrix(int dim, int i, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

}  // namespace

namespace {

// Boundary verdicts need the eigenvalue slack resolved well below the
// membership tolerance.
SdpOptions tightened(const SdpOptions& opts) {
  SdpOptions t = opts;
  t.tol = std::min(t.tol, 1e-9);
  t.gap_tol = std::min(t.gap_tol, 1e-9);
  return t;
}

}  // namespace

MembershipResult th1_membership(const GraphSpec& g, const Eigen::VectorXd& x,
                                double tol, const SdpOptions& opts) {
  if (x.size() != g.n)
    throw Error(Errc::ShapeMismatch, "point dimension != vertex count");
  const int dim = g.n + 1;
  BlockMatrix f0;
  f0.blocks = {Eigen::MatrixXd::Zero(dim, dim)};
  auto& m0 = f0.blocks[0];
  m0(0, 0) = 1;
  for (int i = 0; i < g.n; ++i) {
    m0(0, i + 1) = m0(i + 1, 0) = x(i);
    m0(i + 1, i + 1) = x(i);
  }
  std::vector<BlockMatrix> fs;
  for (auto [i, j] : non_edges(g)) {
    BlockMatrix f;
    f.blocks = {pair_matrix(dim, i + 1, j + 1)};
    fs.push_back(f);
  }
  BlockMatrix ft;
  ft.blocks = {-Eigen::MatrixXd::Identity(dim, dim)};
  fs.push_back(ft);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<int>(fs.size()));
  b(b.size() - 1) = 1;

  SdpSolution sol = solve_lmi(f0, fs, b, tightened(opts));
  MembershipResult res;
  if (sol.status == SdpStatus::Unbounded) {
    res.member = true;  // unreachable for TH(G), kept for safety
    return res;
  }
  if (sol.status == SdpStatus::Optimal) {
    res.slack = sol.primal_obj;
    res.member = res.slack >= -tol;
    res.boundary = std::fabs(res.slack) <= tol;
    return res;
  }
  // Stalled solve: the final iterate may still exhibit a feasible moment
  // matrix, which certifies membership on its own.
  double t_last = sol.y.size() ? sol.y(sol.y.size() - 1) : 0.0;
  double lam = min_eigenvalue(sol.s.blocks[0]) + t_last;
  if (lam >= -tol) {
    res.slack = lam;
    res.member = true;
    res.boundary = std::fabs(lam) <= tol;
    return res;
  }
  throw Error(Errc::SolverFailure, "membership solve did not converge");
}

double th1_optimize(const GraphSpec& g, const Eigen::VectorXd& c,
                    const SdpOptions& opts) {
  if (c.size() != g.n)
    throw Error(Errc::ShapeMismatch, "direction dimension != vertex count");
  const int dim = g.n + 1;
  BlockMatrix f0;
  f0.blocks = {Eigen::MatrixXd::Zero(dim, dim)};
  f0.blocks[0](0, 0) = 1;
  std::vector<BlockMatrix> fs;
  Eigen::VectorXd b;
  std::vector<double> bvals;
  for (int i = 0; i < g.n; ++i) {
    BlockMatrix f;
    Eigen::MatrixXd m = pair_matrix(dim, 0, i + 1);
    m(i + 1, i + 1) = 1;
    f.blocks = {m};
    fs.push_back(f);
    bvals.push_back(c(i));
  }
  for (auto [i, j] : non_edges(g)) {
    BlockMatrix f;
    f.blocks = {pair_matrix(dim, i + 1, j + 1)};
    fs.push_back(f);
    bvals.push_back(0);
  }
  b = Eigen::Map<Eigen::VectorXd>(bvals.data(), static_cast<int>(bvals.size()));
  SdpSolution sol = solve_lmi(f0, fs, b, opts);
  if (sol.status != SdpStatus::Optimal)
    throw Error(Errc::SolverFailure, "theta optimization did not converge");
  return sol.primal_obj;
}

PerfectionProbe perfection_probe(const GraphSpec& g,
                                 const std::vector<Eigen::VectorXd>& directions,
                                 const SdpOptions& opts) {
  PerfectionProbe probe;
  auto stabs = stab_enumerate(g);
  for (const auto& c : directions) {
    double relax = th1_optimize(g, c, opts);
    double best = 0;
    for (const auto& s : stabs)
      best = std::max(best, c.dot(s.cast<double>()));
    probe.directions.push_back(c);
    probe.relaxation_values.push_back(relax);
    probe.stable_set_values.push_back(best);
    probe.gaps.push_back(relax - best);
    probe.max_gap = std::max(probe.max_gap, relax - best);
  }
  return probe;
}

int Poly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;  // zero polynomial
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly normal_form(const Poly& q, const UnivariateIdeal& ideal) {
  const int d = ideal.generator.degree();
  if (d < 1) throw Error(Errc::ParseError, "generator must have degree >= 1");
  Poly r = q;
  r.trim();
  const Rat lead = ideal.generator.c[d];
  while (r.degree() >= d) {
    int rd = r.degree();
    Rat factor = r.c[rd] / lead;
    for (int i = 0; i <= d; ++i)
      r.c[rd - d + i] -= factor * ideal.generator.c[i];
    r.trim();
  }
  r.c.resize(d, Rat(0));
  return r;
}

MembershipResult univariate_thk_membership(const UnivariateIdeal& ideal, int k,
                                           double x0, double tol,
                                           const SdpOptions& opts) {
  const int d = ideal.generator.degree();
  if (d < 1) throw Error(Errc::ParseError, "generator must have degree >= 1");
  if (k < 1) throw Error(Errc::ParseError, "level k must be >= 1");
  MembershipResult res;
  if (d == 1) {
    // Single variety point -c0/c1.
    double root = to_double(-ideal.generator.c[0] / ideal.generator.c[1]);
    res.member = std::fabs(x0 - root) <= tol;
    res.boundary = res.member;
    res.slack = -std::fabs(x0 - root);
    return res;
  }

  // Normal forms of x^m for m = 0..2k; y_m = sum_t nf[m]_t y_t with y_0 = 1,
  // y_1 = x0 pinned and y_2..y_{d-1} free.
  std::vector<Poly> nf(2 * k + 1);
  Poly x{std::vector<Rat>{Rat(0), Rat(1)}};
  Poly cur{std::vector<Rat>{Rat(1)}};
  for (int m = 0; m <= 2 * k; ++m) {
    nf[m] = normal_form(cur, ideal);
    // multiply by x
    Poly next;
    next.c.assign(cur.c.size() + 1, Rat(0));
    for (size_t i = 0; i < cur.c.size(); ++i) next.c[i + 1] = cur.c[i];
    cur = next;
  }

  const int dim = k + 1;
  const int nfree = std::max(0, d - 2);
  BlockMatrix f0;
  f0.blocks = {Eigen::MatrixXd::Zero(dim, dim)};
  std::vector<BlockMatrix> raw(nfree);
  for (int t = 0; t < nfree; ++t)
    raw[t].blocks = {Eigen::MatrixXd::Zero(dim, dim)};
  for (int a = 0; a < dim; ++a)
    for (int bb = 0; bb < dim; ++bb) {
      const Poly& p = nf[a + bb];
      f0.blocks[0](a, bb) +=
          to_double(p.c[0]) + to_double(p.c[1]) * x0;
      for (int t = 0; t < nfree; ++t)
        raw[t].blocks[0](a, bb) += to_double(p.c[2 + t]);
    }
  // Moments beyond the matrix never show up at low levels; drop the
  // all-zero coefficient matrices so the system stays well-posed.
  std::vector<BlockMatrix> base;
  for (auto& r : raw)
    if (r.blocks[0].cwiseAbs().maxCoeff() > 0) base.push_back(std::move(r));

  // Below level d/2 the moment slice can be unbounded (TH_1 here is the
  // whole line) and sup lambda_min is unattained; boxing the free moments
  // restores attainment. Solved boxed only when the plain solve stalls.
  auto solve_once = [&](bool boxed) {
    BlockMatrix g0 = f0;
    std::vector<BlockMatrix> fs = base;
    const int nv = static_cast<int>(fs.size());
    if (boxed) {
      const double box = 1e3;
      for (int p = 0; p < nv; ++p) {
        for (int q = 0; q < nv; ++q) {
          fs[q].blocks.push_back((q == p ? -1.0 : 0.0) *
                                 Eigen::MatrixXd::Ones(1, 1));
          fs[q].blocks.push_back((q == p ? 1.0 : 0.0) *
                                 Eigen::MatrixXd::Ones(1, 1));
        }
        g0.blocks.push_back(box * Eigen::MatrixXd::Ones(1, 1));
        g0.blocks.push_back(box * Eigen::MatrixXd::Ones(1, 1));
      }
    }
    BlockMatrix ft;
    ft.blocks = {-Eigen::MatrixXd::Identity(dim, dim)};
    if (boxed)
      for (int p = 0; p < 2 * nv; ++p)
        ft.blocks.push_back(Eigen::MatrixXd::Zero(1, 1));
    fs.push_back(ft);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<int>(fs.size()));
    b(b.size() - 1) = 1;
    return solve_lmi(g0, fs, b, tightened(opts));
  };

  SdpSolution sol = solve_once(false);
  bool stalled =
      sol.status != SdpStatus::Optimal && sol.status != SdpStatus::Unbounded;
  // Stalled solves can still hold a feasible moment matrix in the final
  // iterate (the slice is singular throughout once the matrix outgrows the
  // variety), which certifies membership by itself.
  auto witness_slack = [&](const SdpSolution& s_) {
    double t_last = s_.y.size() ? s_.y(s_.y.size() - 1) : 0.0;
    return min_eigenvalue(s_.s.blocks[0]) + t_last;
  };
  if (stalled && witness_slack(sol) < -tol) {
    sol = solve_once(true);
    stalled =
        sol.status != SdpStatus::Optimal && sol.status != SdpStatus::Unbounded;
  }
  if (sol.status == SdpStatus::Unbounded) {
    res.member = true;
    return res;
  }
  if (!stalled) {
    res.slack = sol.primal_obj;
    res.member = res.slack >= -tol;
    res.boundary = std::fabs(res.slack) <= tol;
    return res;
  }
  double lam = witness_slack(sol);
  if (lam >= -tol) {
    res.slack = lam;
    res.member = true;
    res.boundary = std::fabs(lam) <= tol;
    return res;
  }
  throw Error(Errc::SolverFailure, "moment feasibility solve failed");
}

bool theta_factorization_check(const GraphSpec& g) {
  auto stabs = stab_enumerate(g);
  for (const auto& s : stabs) {
    Eigen::VectorXd v(g.n + 1);
    v(0) = 1;
    for (int i = 0; i < g.n; ++i) v(i + 1) = s(i);
    Eigen::MatrixXd moment = v * v.transpose();
    // Rank-one moment matrix must satisfy the TH(G) constraints exactly.
    for (int i = 0; i < g.n; ++i)
      if (moment(i + 1, i + 1) != static_cast<double>(s(i))) return false;
    for (auto [a, b] : g.edges)
      if (moment(a + 1, b + 1) != 0) return false;
    if (!psd_check(moment, 1e-9)) return false;
  }
  return true;
}

namespace {

// Minimal monomial-sum parser: terms like "3/2x^4", "-x", "+ 7".
Poly parse_poly(const std::string& input) {
  std::string s;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  std::vector<std::pair<Rat, int>> terms;
  size_t pos = 0;
  while (pos < s.size()) {
    Rat sign(1);
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= s.size()) throw Error(Errc::ParseError, "trailing sign");
    // coefficient
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) ||
            s[pos] == '/' || s[pos] == '.'))
      ++pos;
    Rat coeff = (pos > start) ? parse_rat(s.substr(start, pos - start))
                              : Rat(1);
    int exp = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (pos == es) throw Error(Errc::ParseError, "missing exponent");
        exp = std::stoi(s.substr(es, pos - es));
      }
    }
    terms.emplace_back(sign * coeff, exp);
  }
  int deg = 0;
  for (auto& [c, e] : terms) deg = std::max(deg, e);
  Poly p;
  p.c.assign(deg + 1, Rat(0));
  for (auto& [c, e] : terms) p.c[e] += c;
  p.trim();
  if (p.c.empty()) p.c.push_back(Rat(0));
  return p;
}

}  // namespace

Poly poly_from_string(const std::string& s) { return parse_poly(s); }

std::string poly_to_string(const Poly& p) {
  if (p.degree() < 0) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.c[i] == 0) continue;
    Rat c = p.c[i];
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (i == 0 || c != 1) out += rat_str(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace liftkit
