// Copyright 2026 The corrcap Authors
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

#include "corrcap/error.hpp"

namespace corrcap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::BadSubsystemIndex: return "BadSubsystemIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ProjectorsNotResolution: return "ProjectorsNotResolution";
    case ErrorCode::WrongDims: return "WrongDims";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotQubits: return "NotQubits";
    case ErrorCode::BadEffect: return "BadEffect";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace corrcap
