// Copyright 2026 The sigraph Authors
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

#ifndef SIGRAPH_ERRORS_H_
#define SIGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigraph {

// Machine-readable error categories. The CLI reports these as the "code"
// field of its error JSON.
enum class ErrorCode {
  kArgument,
  kPrecondition,
  kCapacity,
  kContract,
  kMalformedGraph6,
  kUnknownSeed,
  kInfeasible,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Out-of-range vertex ids, missing edges, operations on disconnected graphs
// that are only defined for connected ones.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message)
      : Error(ErrorCode::kArgument, message) {}
};

// Input violates an operation's stated precondition (e.g. non-SI input to a
// gadget, anchor of the wrong degree).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorCode::kPrecondition, message) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message)
      : Error(ErrorCode::kCapacity, message) {}
};

// A postcondition the library guarantees did not hold. Always a library bug.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& message)
      : Error(ErrorCode::kContract, message) {}
};

class Graph6Error : public Error {
 public:
  explicit Graph6Error(const std::string& message)
      : Error(ErrorCode::kMalformedGraph6, message) {}
};

class UnknownSeedError : public Error {
 public:
  explicit UnknownSeedError(const std::string& message)
      : Error(ErrorCode::kUnknownSeed, message) {}
};

}  // namespace sigraph

#endif  // SIGRAPH_ERRORS_H_
