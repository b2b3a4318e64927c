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

#ifndef LIFTKIT_LIFTS_HPP
#define LIFTKIT_LIFTS_HPP

#include <optional>
#include <vector>

#include "liftkit/factorization.hpp"
#include "liftkit/polytope.hpp"
#include "liftkit/sdp.hpp"
#include "liftkit/simplex.hpp"

namespace liftkit {

enum class Cone { Nonneg, Psd };

// Slice of R+^k with an affine recovery map x = R y + r; the equalities are
// stored in canonical (RREF) form.
struct PolyhedralLift {
  int k = 0;
  RatMat eq_coeffs;  // E
  RatVec eq_rhs;     // e
  RatMat recover_mat;  // R (n x k)
  RatVec recover_off;  // r
  std::optional<NonnegFactorization> source;
};

// Spectrahedral lift via per-facet couplings 1 - <g_j, x> = <Z, B_j>; the
// facet normals g_j live in the polytope the lift belongs to.
struct SpectrahedralLift {
  int k = 0;
  std::vector<RatMat> col_factors;  // B_j, exact rationals
  std::optional<PsdFactorization> source;
};

// Explicit (K, L, pi) form used by verification and extraction; both lift
// types convert into it, and external lifts (e.g. hand-built slices) enter
// here directly.
struct ConeLift {
  Cone cone = Cone::Nonneg;
  int k = 0;
  // L: Nonneg: eq_a y = eq_b. Psd: <eq_mats[m], Z> = eq_b[m].
  RatMat eq_a;
  std::vector<RatMat> eq_mats;
  RatVec eq_b;
  // pi: Nonneg: x = proj_a y + proj_off. Psd: x_t = <proj_mats[t], Z> +
  // proj_off[t].
  RatMat proj_a;
  std::vector<RatMat> proj_mats;
  RatVec proj_off;

  int ambient_dim() const {
    return static_cast<int>(cone == Cone::Nonneg ? proj_a.rows()
                                                 : proj_mats.size());
  }
};

ConeLift to_cone_lift(const PolyhedralLift& lift);
ConeLift to_cone_lift(const SpectrahedralLift& lift, const Polytope& p);

// Converse direction of the factorization theorem: the slice
// {y in R+^k : exists x, F x + B' y = d} with x eliminated exactly.
PolyhedralLift build_polyhedral_lift(const Polytope& p,
                                     const NonnegFactorization& fac);

// Couplings from the column factors; projection well-definedness is the
// full-column-rank test on the facet normals.
SpectrahedralLift build_psd_lift(const Polytope& p, const PsdFactorization& fac,
                                 double tol = 1e-7);

struct LiftVerification {
  bool verdict = false;
  bool exact = false;
  double tol = 0;
  std::vector<bool> vertex_feasible;
  std::vector<Eigen::VectorXd> vertex_preimages;   // nonneg cone elements
  std::vector<Eigen::MatrixXd> vertex_preimages_psd;
  std::vector<double> facet_support_values;
  std::vector<Rat> facet_support_exact;  // filled in exact mode
};

// (a) per-vertex feasibility solves find preimages; (b) per-facet support
// maximization over the slice stays within tol of 1. Polyhedral lifts verify
// in exact rational LP mode when exact_lp is set.
LiftVerification verify_lift(const Polytope& p, const ConeLift& lift,
                             double tol = 1e-6, bool exact_lp = true,
                             const SdpOptions& opts = {});
LiftVerification verify_lift(const Polytope& p, const PolyhedralLift& lift,
                             double tol = 1e-6, bool exact_lp = true);
LiftVerification verify_lift(const Polytope& p, const SpectrahedralLift& lift,
                             double tol = 1e-6, const SdpOptions& opts = {});

// Interior test: max over the slice of the minimum slack (eigenvalue).
struct ProperCheck {
  bool proper = false;
  double margin = 0;
};
ProperCheck lift_properness(const ConeLift& lift, double tol = 1e-7,
                            const SdpOptions& opts = {});

// Forward direction of the factorization theorem: row factors from vertex
// preimage solves, column factors from facet dual solves. Throws NotProper
// when the slice misses the cone's interior.
struct ExtractedFactorization {
  Cone cone = Cone::Nonneg;
  std::optional<NonnegFactorization> nonneg;
  std::optional<PsdFactorization> psd;
};
ExtractedFactorization lift_to_factorization(const Polytope& p,
                                             const ConeLift& lift,
                                             double tol = 1e-6,
                                             const SdpOptions& opts = {});

}  // namespace liftkit

#endif  // LIFTKIT_LIFTS_HPP
