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

#ifndef STAFFING_ERROR_HPP_
#define STAFFING_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace staffing {

enum class ErrorCode {
  kDomain,          // argument outside the mathematical domain
  kUnstable,        // lambda >= n where a stationary quantity was requested
  kValidation,      // malformed input data
  kBoundary,        // key-scenario tail sum ties epsilon
  kBracket,         // root bracket could not be expanded below the cap
  kNonConvergence,  // iteration budget exhausted
  kInfeasible,      // no decision satisfies the constraint
  kEnumerationCap,  // candidate set too large to enumerate
  kIo,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `pointer()` carries a
// JSON pointer to the offending input field when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string pointer = {})
      : std::runtime_error(message), code_(code), pointer_(std::move(pointer)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  ErrorCode code_;
  std::string pointer_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string pointer = {}) {
  throw Error(code, message, std::move(pointer));
}

}  // namespace staffing

#endif  // STAFFING_ERROR_HPP_
