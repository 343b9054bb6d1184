// Copyright 2026 The lpcoh Authors
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

#include "lpcoh/error.hpp"

namespace lpcoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TauZero: return "TauZero";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidCutoff: return "InvalidCutoff";
    case ErrorCode::SupportEscapesWindow: return "SupportEscapesWindow";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lpcoh
