// Copyright 2026 The Weyl Authors
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

#include "weyl/error.hpp"

namespace weyl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotInChamber: return "NotInChamber";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::BoxViolation: return "BoxViolation";
    case ErrorCode::InvalidContent: return "InvalidContent";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotOnFsimPlane: return "NotOnFsimPlane";
    case ErrorCode::CalibrationFailure: return "CalibrationFailure";
    case ErrorCode::NotReachable: return "NotReachable";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NotReachableByFamily: return "NotReachableByFamily";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace weyl
