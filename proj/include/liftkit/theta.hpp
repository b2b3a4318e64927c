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

#ifndef LIFTKIT_THETA_HPP
#define LIFTKIT_THETA_HPP

#include <string>
#include <utility>
#include <vector>

#include "liftkit/rational.hpp"
#include "liftkit/sdp.hpp"

namespace liftkit {

struct GraphSpec {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, i < j
};

// Normalizes edge order, rejects loops/duplicates/out-of-range vertices.
GraphSpec make_graph(int n, std::vector<std::pair<int, int>> edges);

// All stable-set incidence vectors (including the empty set), in subset
// order. Throws TooLarge above 20 vertices.
std::vector<Eigen::VectorXi> stab_enumerate(const GraphSpec& g);

struct MembershipResult {
  bool member = false;
  bool boundary = false;  // within tol of the boundary
  double slack = 0;       // optimal strict-feasibility slack
};

// x in TH(G): feasibility of [[1, x'], [x, U]] psd with U_ii = x_i and
// U_ij = 0 on edges, decided by maximizing the least eigenvalue.
MembershipResult th1_membership(const GraphSpec& g, const Eigen::VectorXd& x,
                                double tol = 1e-7,
                                const SdpOptions& opts = {});

// max <c, x> over TH(G).
double th1_optimize(const GraphSpec& g, const Eigen::VectorXd& c,
                    const SdpOptions& opts = {});

struct PerfectionProbe {
  std::vector<Eigen::VectorXd> directions;
  std::vector<double> relaxation_values;  // th1 optimum per direction
  std::vector<double> stable_set_values;  // brute-force optimum
  std::vector<double> gaps;
  double max_gap = 0;
};

PerfectionProbe perfection_probe(const GraphSpec& g,
                                 const std::vector<Eigen::VectorXd>& directions,
                                 const SdpOptions& opts = {});

// Dense univariate polynomial, c[i] the coefficient of x^i.
struct Poly {
  std::vector<Rat> c;

  int degree() const;
  void trim();
};

Poly poly_from_string(const std::string& s);  // e.g. "x^4 - x^3 - x^2 + x"
std::string poly_to_string(const Poly& p);

struct UnivariateIdeal {
  Poly generator;  // degree >= 1
};

// Exact remainder of q modulo the generator.
Poly normal_form(const Poly& q, const UnivariateIdeal& ideal);

// Level-k theta body membership for the principal ideal: feasibility of the
// (k+1)x(k+1) moment matrix M_ab = y_{a+b} with y_0 = 1, y_1 = x0 and higher
// moments reduced through the ideal's normal form.
MembershipResult univariate_thk_membership(const UnivariateIdeal& ideal, int k,
                                           double x0, double tol = 1e-7,
                                           const SdpOptions& opts = {});

// Every stable-set incidence vector lifts to the rank-one moment matrix
// satisfying the TH(G) constraints.
bool theta_factorization_check(const GraphSpec& g);

}  // namespace liftkit

#endif  // LIFTKIT_THETA_HPP
