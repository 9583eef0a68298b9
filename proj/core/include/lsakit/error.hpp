// Copyright 2026 The lsakit Authors.
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

#ifndef LSAKIT_ERROR_HPP_
#define LSAKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsakit {

enum class ErrorCode {
  kSingularMatrix,
  kDimensionMismatch,
  kNotARepresentation,
  kInvalidInput,
  kDegenerateForm,
  kBadParams,
  kIrrationalSquareRoot,
  kNotAnLSA,
  kNotMatched,
  kNotAPLSBA,
  kNotAnSLSBA,
  kUnknownEntry,
  kParseError,
  kIndexOutOfRange,
  kDuplicateAssignment,
  kUnknownCheck,
  kInternalMismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lsakit

#endif  // LSAKIT_ERROR_HPP_
