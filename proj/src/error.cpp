// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/error.hpp"

namespace nsg {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ContainsUnit: return "ContainsUnit";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::SymmetricInput: return "SymmetricInput";
    case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorCode::NotAGap: return "NotAGap";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoCoprimeBasePair: return "NoCoprimeBasePair";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NuTooLarge: return "NuTooLarge";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::StandardFormViolation: return "StandardFormViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InternalMismatch:
    case ErrorCode::IdentityViolation:
    case ErrorCode::NonIntegerResult:
    case ErrorCode::StandardFormViolation:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::int64_t> value)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      value_(value) {}

void raise(ErrorCode code, const std::string& message, std::optional<std::int64_t> value) {
  throw Error(code, message, value);
}

}  // namespace nsg
