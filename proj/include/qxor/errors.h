// Copyright 2026 The qxor Authors
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

#ifndef QXOR_ERRORS_H_
#define QXOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qxor {

// Root of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or vector dimensions incompatible with the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input data violates a domain invariant (game normalization, unitarity,
// commutation, embedding pattern, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Commuting-model strategy whose blocks fail to commute.
class ModelError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Strategy whose correlation does not have the corner-block pattern.
class EmbeddingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numerical routine could not produce a result within tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qxor

#endif  // QXOR_ERRORS_H_
