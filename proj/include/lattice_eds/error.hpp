// Copyright 2026 The lattice-eds Authors
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

#ifndef LATTICE_EDS_ERROR_HPP_
#define LATTICE_EDS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lattice_eds {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate outside the vertex set of the lattice it was used with.
class InvalidCoordinate : public Error {
 public:
  using Error::Error;
};

// A parameter outside an operation's domain (wrong parity, too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An input that breaks an operation's precondition, e.g. a set that is not a
// 2-packing handed to an operation that requires one.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The instance is larger than the configured solver limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (lattice descriptors, set files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lattice_eds

#endif  // LATTICE_EDS_ERROR_HPP_
