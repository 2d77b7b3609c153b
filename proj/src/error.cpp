// Copyright 2026 The Staffing Authors
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

#include "staffing/error.hpp"

namespace staffing {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnstable: return "unstable";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kBoundary: return "boundary";
    case ErrorCode::kBracket: return "bracket";
    case ErrorCode::kNonConvergence: return "non-convergence";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kEnumerationCap: return "enumeration-cap";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace staffing
