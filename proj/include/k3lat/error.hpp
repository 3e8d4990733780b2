// Copyright 2026 The k3lat Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3lat {

/// Domain failure kinds. Every exception thrown by the library carries one.
enum class ErrorCode {
  InvalidArgument,
  Singular,
  NotTwoElementary,
  OddLattice,
  NotIntegral,
  NotInDual,
  NotUnimodular,
  NotGraph,
  NotIsometry,
  DegenerateForm,
  NotIsotropic,
  BoundExceeded,
  NotDefinite,
  NonIntegerExponents,
  InsufficientPrecision,
  SignatureMismatch,
  NotFound,
  NotUnique,
  PrecisionTooLow,
  UnsupportedInvariant,
  NotRealizable,
  OutOfFamily,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotTwoElementary: return "NotTwoElementary";
    case ErrorCode::OddLattice: return "OddLattice";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotInDual: return "NotInDual";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotGraph: return "NotGraph";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::NonIntegerExponents: return "NonIntegerExponents";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::UnsupportedInvariant: return "UnsupportedInvariant";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::OutOfFamily: return "OutOfFamily";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace k3lat
