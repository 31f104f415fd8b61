// Copyright 2026 The exdeploy Authors
//
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

#ifndef EXDEPLOY_ERRORS_H_
#define EXDEPLOY_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace exdeploy {

// Root of every error thrown by the library. The CLI maps the four
// families below to distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files (bad JSON, bad CSV, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A well-formed input that breaks a documented invariant. `field()` names
// the offending scenario field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Requested metric cannot operate on the scenario geometry.
class MetricGeometryMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

#define EXDEPLOY_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

// Geometry and distance queries.
EXDEPLOY_DEFINE_ERROR(InvalidQuery);
EXDEPLOY_DEFINE_ERROR(InvalidEndpoint);
EXDEPLOY_DEFINE_ERROR(OutOfGrid);
EXDEPLOY_DEFINE_ERROR(InvalidWindow);
EXDEPLOY_DEFINE_ERROR(WindowTooLarge);
EXDEPLOY_DEFINE_ERROR(InvalidWeights);
EXDEPLOY_DEFINE_ERROR(InvalidParams);

// Matrices and set functions.
EXDEPLOY_DEFINE_ERROR(InvalidD0);
EXDEPLOY_DEFINE_ERROR(DimensionMismatch);
EXDEPLOY_DEFINE_ERROR(ElementAlreadyInSet);
EXDEPLOY_DEFINE_ERROR(InvalidK);
EXDEPLOY_DEFINE_ERROR(InvalidConstraint);
EXDEPLOY_DEFINE_ERROR(InstanceTooLarge);
EXDEPLOY_DEFINE_ERROR(EmptySet);
EXDEPLOY_DEFINE_ERROR(PhantomInSelection);

#undef EXDEPLOY_DEFINE_ERROR

}  // namespace exdeploy

#endif  // EXDEPLOY_ERRORS_H_
