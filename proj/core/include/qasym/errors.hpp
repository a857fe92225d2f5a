// Copyright 2026 The qasym Authors
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

#ifndef QASYM_ERRORS_HPP
#define QASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qasym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed data, precondition violations. CLI exit 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Numerical breakdown (eigensolver, singular Sylvester system, overflow). CLI exit 2.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// A generator whose spectrum leaves the closed left half-plane.
class InvalidGenerator : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// A state the algorithms can only reach through a bug.
class InternalLogicError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// A structural property that must hold was observed to fail. CLI exit 3.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

inline void require_same_dim(long a, long b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

}  // namespace qasym

#endif  // QASYM_ERRORS_HPP
