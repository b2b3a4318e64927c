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

#include "liftkit/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "liftkit/error.hpp"

namespace liftkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::OriginNotInterior: return "OriginNotInterior";
    case Errc::RedundantInequality: return "RedundantInequality";
    case Errc::NonExtremePoint: return "NonExtremePoint";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonSymmetricFactor: return "NonSymmetricFactor";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::FactorizationInvalid: return "FactorizationInvalid";
    case Errc::ProjectionIllDefined: return "ProjectionIllDefined";
    case Errc::NotProper: return "NotProper";
    case Errc::SolverFailure: return "SolverFailure";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NotOctahedron: return "NotOctahedron";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IllPosed: return "IllPosed";
    case Errc::InconsistencyError: return "InconsistencyError";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error(Errc::ParseError, "empty rational literal");
  try {
    auto slash = t.find('/');
    if (slash != std::string::npos) return Rat(t);
    auto dot = t.find('.');
    auto exp = t.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) return Rat(t);
    // Decimal literal: mantissa scaled by a power of ten.
    long e10 = 0;
    std::string mant = t;
    if (exp != std::string::npos) {
      e10 = std::atol(t.substr(exp + 1).c_str());
      mant = t.substr(0, exp);
    }
    dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      e10 -= static_cast<long>(mant.size() - dot - 1);
    }
    // Strip leading zeros; GMP reads a 0-prefix as octal.
    std::string sign;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      if (digits[0] == '-') sign = "-";
      digits.erase(0, 1);
    }
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    if (digits.empty())
      throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
    Rat r{Int(sign + digits)};
    Int p10 = 1;
    for (long i = 0; i < std::labs(e10); ++i) p10 *= 10;
    if (e10 >= 0)
      r *= Rat(p10);
    else
      r /= Rat(p10);
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_from_double_exact(double x) {
  if (!std::isfinite(x))
    throw Error(Errc::ParseError, "non-finite double in exact conversion");
  if (x == 0.0) return Rat(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  // 53 doublings make the mantissa integral.
  Int num = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rat r(num);
  Int p2 = Int(1) << std::abs(e);
  if (e >= 0)
    r *= Rat(p2);
  else
    r /= Rat(p2);
  return r;
}

Rat rat_round(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(Errc::ParseError, "non-finite double");
  bool neg = x < 0;
  double v = std::fabs(x);
  // Continued fraction convergents p/q with q capped.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || p2 < 0 || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

Eigen::MatrixXd to_double_matrix(const RatMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

RatMat to_rat_matrix(const Eigen::MatrixXd& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = rat_from_double_exact(m(i, j));
  return out;
}

}  // namespace liftkit
