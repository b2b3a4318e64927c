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

#ifndef LIFTKIT_RATIONAL_HPP
#define LIFTKIT_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace liftkit {

// Exact scalar used by all geometry. Floating point appears only on the
// solver side (sdp.hpp).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Canonical "p/q" string (q > 0, gcd = 1); integers print without "/q".
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", decimal literals like "-0.25", and plain exponents.
Rat parse_rat(const std::string& s);

double to_double(const Rat& r);

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double_exact(double x);

// Nearest rational with denominator at most max_den (continued fractions).
Rat rat_round(double x, long max_den = 1000000);

Eigen::MatrixXd to_double_matrix(const RatMat& m);
RatMat to_rat_matrix(const Eigen::MatrixXd& m);

}  // namespace liftkit

#endif  // LIFTKIT_RATIONAL_HPP
