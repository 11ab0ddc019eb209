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

#include "sigraph/errors.h"

namespace sigraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArgument:
      return "argument_error";
    case ErrorCode::kPrecondition:
      return "precondition_error";
    case ErrorCode::kCapacity:
      return "capacity_error";
    case ErrorCode::kContract:
      return "contract_error";
    case ErrorCode::kMalformedGraph6:
      return "malformed_graph6";
    case ErrorCode::kUnknownSeed:
      return "unknown_seed";
    case ErrorCode::kInfeasible:
      return "infeasible_target";
    case ErrorCode::kIo:
      return "io_error";
  }
  return "unknown";
}

}  // namespace sigraph
