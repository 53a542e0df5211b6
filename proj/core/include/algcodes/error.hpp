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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algcodes {

enum class ErrorCode {
  InvalidArgument,
  NonPrimitivePolynomial,
  DivisionByZero,
  DimensionMismatch,
  MTooSmall,
  ZeroCoordinatePoint,
  IncompleteCover,
  InconsistentKnownValues,
  DecodingFailure,
  RankDeficient,
  NonGenericSupport,
  NotAZeroPoint,
  BadRedundancy,
  ExtendedDecodeUnsupported,
  ParseError,
};

/// Machine-readable name of an error code, e.g. "DecodingFailure".
std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The message always
/// starts with the code name so that callers can forward it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace algcodes
