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

#include "privsampler/errors.h"

namespace privsampler {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotNormalized:
      return "NotNormalized";
    case ErrorCode::kNegativeEntry:
      return "NegativeEntry";
    case ErrorCode::kZeroEntry:
      return "ZeroEntry";
    case ErrorCode::kTooShort:
      return "TooShort";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kAlphaOutOfRange:
      return "AlphaOutOfRange";
    case ErrorCode::kNegativeEpsilon:
      return "NegativeEpsilon";
    case ErrorCode::kNonFiniteEpsilon:
      return "NonFiniteEpsilon";
    case ErrorCode::kQminOutOfRange:
      return "QminOutOfRange";
    case ErrorCode::kBisectionFailure:
      return "BisectionFailure";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kMalformedRow:
      return "MalformedRow";
    case ErrorCode::kEmptyAfterFiltering:
      return "EmptyAfterFiltering";
    case ErrorCode::kInconsistentCategories:
      return "InconsistentCategories";
    case ErrorCode::kGridOutOfRange:
      return "GridOutOfRange";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace privsampler
