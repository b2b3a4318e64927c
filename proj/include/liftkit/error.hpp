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

#ifndef LIFTKIT_ERROR_HPP
#define LIFTKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liftkit {

enum class Errc {
  NotFullDimensional,
  OriginNotInterior,
  RedundantInequality,
  NonExtremePoint,
  ShapeMismatch,
  NonSymmetricFactor,
  NotSymmetric,
  FactorizationInvalid,
  ProjectionIllDefined,
  NotProper,
  SolverFailure,
  WrongDimension,
  NotOctahedron,
  UnsupportedDimension,
  TooLarge,
  IllPosed,
  InconsistencyError,
  BudgetExceeded,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace liftkit

#endif  // LIFTKIT_ERROR_HPP
