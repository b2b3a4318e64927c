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

#ifndef LIFTKIT_JSON_IO_HPP
#define LIFTKIT_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "liftkit/lifts.hpp"
#include "liftkit/polytope.hpp"
#include "liftkit/theta.hpp"

namespace liftkit {

using Json = nlohmann::ordered_json;

// Rationals serialize as canonical "p/q" strings; readers also accept JSON
// numbers (converted exactly from their binary representation).
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);  // bare 2D array or {"entries": ...}

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, const std::string& name = "input");

Json slack_to_json(const SlackMatrix& s);

Json nonneg_factorization_to_json(const NonnegFactorization& f);
NonnegFactorization nonneg_factorization_from_json(const Json& j);

Json psd_factorization_to_json(const PsdFactorization& f);
PsdFactorization psd_factorization_from_json(const Json& j);

Json polyhedral_lift_to_json(const PolyhedralLift& l);
PolyhedralLift polyhedral_lift_from_json(const Json& j);

Json spectrahedral_lift_to_json(const SpectrahedralLift& l);
SpectrahedralLift spectrahedral_lift_from_json(const Json& j);

// Explicit (K, L, pi) lifts for `lift extract` on hand-built slices.
Json cone_lift_to_json(const ConeLift& l);
ConeLift cone_lift_from_json(const Json& j);

// Accepts {"k", "equalities", ...} (polyhedral), {"k", "couplings", ...}
// (spectrahedral; needs the polytope), or {"cone", ...} (explicit).
ConeLift any_lift_from_json(const Json& j, const Polytope& p);

Json graph_to_json(const GraphSpec& g);
GraphSpec graph_from_json(const Json& j);        // {"n", "edges": [[i,j],...]}, 1-based
GraphSpec graph_from_dimacs(const std::string& text);

// File loader that understands "-" as standard input and picks JSON vs
// DIMACS for graphs by content.
std::string read_input(const std::string& path);

}  // namespace liftkit

#endif  // LIFTKIT_JSON_IO_HPP
