// Copyright 2026 The dqc1sim Authors
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

#pragma once

#include <stdexcept>

// Argument and precondition failures throw std::invalid_argument. The types
// below mark the domain failures callers are expected to handle distinctly.
namespace dqc1sim {

/// Estimation is impossible for the requested configuration (alpha = 0,
/// no counts in either port).
class EstimationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tomographic counts cannot be normalised into probabilities.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON input (matrix, circuit, tomography run).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported configuration (e.g. a multi-qubit measured subsystem).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dqc1sim
