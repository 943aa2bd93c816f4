// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_ERROR_H_
#define QWALK_ERROR_H_

#include <stdexcept>
#include <string>

namespace qwalk {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad ids, mismatched dimensions, non-unitary operators.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A vertex without out-edges has an empty coin space.
class DegenerateGraphError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedDimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Input is well formed but outside the domain of a specialised algorithm.
class ApplicabilityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Unparseable or inconsistent run configuration.
class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical invariant broke while computing (e.g. a transition column that
// does not sum to one).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// The requested state space does not fit the configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A trajectory reached a column that was never materialised.
class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk

#endif  // QWALK_ERROR_H_
