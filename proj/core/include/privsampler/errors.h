// Copyright 2026 The privsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVSAMPLER_ERRORS_H_
#define PRIVSAMPLER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace privsampler {

// Machine-checkable failure categories. CLI exit codes map IoError to 3 and
// every other code to 2 (input validation).
enum class ErrorCode {
  kNotNormalized,
  kNegativeEntry,
  kZeroEntry,
  kTooShort,
  kDimensionMismatch,
  kAlphaOutOfRange,
  kNegativeEpsilon,
  kNonFiniteEpsilon,
  kQminOutOfRange,
  kBisectionFailure,
  kInfeasible,
  kMalformedRow,
  kEmptyAfterFiltering,
  kInconsistentCategories,
  kGridOutOfRange,
  kIoError,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace privsampler

#endif  // PRIVSAMPLER_ERRORS_H_
