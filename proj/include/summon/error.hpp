// Copyright 2026 The summon-qec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace summon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidParameter : public Error {
  public:
    using Error::Error;
};

/// A measurement record that no codeword branch can explain.
class CorruptedState : public Error {
  public:
    using Error::Error;
};

/// The decoder was handed fewer qubits than the star of the requested vertex.
class InsufficientQubits : public Error {
  public:
    using Error::Error;
};

class InvalidConfiguration : public Error {
  public:
    using Error::Error;
};

class CausalityViolation : public Error {
  public:
    using Error::Error;
};

/// A conditioned gate read a classical bit that was never written.
class ClassicalBitError : public Error {
  public:
    using Error::Error;
};

} // namespace summon
