// Copyright 2026 The halin-enum Authors
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

#ifndef HALIN_STATUS_H_
#define HALIN_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace halin {

enum class ErrorCode {
  kInvalidArgument,
  kNotATree,
  kEdgeInTree,
  kDegreeTwoVertex,
  kTooFewLeaves,
  kLeafOrderMismatch,
  kInfeasibleParams,
  kParseError,
  kSinkOverflow,
  kTooLarge,
  kInvalidParams,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` tells callers
// which contract was violated.
class HalinError : public std::runtime_error {
 public:
  HalinError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halin

#endif  // HALIN_STATUS_H_
