/*
 * Copyright 2026 The algcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "algcodes/error.hpp"

namespace algcodes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::ZeroCoordinatePoint: return "ZeroCoordinatePoint";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::InconsistentKnownValues: return "InconsistentKnownValues";
    case ErrorCode::DecodingFailure: return "DecodingFailure";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NonGenericSupport: return "NonGenericSupport";
    case ErrorCode::NotAZeroPoint: return "NotAZeroPoint";
    case ErrorCode::BadRedundancy: return "BadRedundancy";
    case ErrorCode::ExtendedDecodeUnsupported: return "ExtendedDecodeUnsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace algcodes
