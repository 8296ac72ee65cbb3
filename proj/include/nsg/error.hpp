// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_ERROR_HPP
#define NSG_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

/// Failure categories raised by the core. Validation failures come first,
/// internal consistency failures last.
enum class ErrorCode {
  InvalidInput,
  TooShort,
  ContainsUnit,
  NotCoprime,
  NotMinimal,
  OutOfRange,
  DimensionUnsupported,
  SymmetricInput,
  NonSymmetricInput,
  NotAGap,
  IndexOutOfRange,
  NoCoprimeBasePair,
  NotPrimitive,
  NuTooLarge,
  InternalMismatch,
  IdentityViolation,
  NonIntegerResult,
  StandardFormViolation,
};

/// Stable CamelCase name, e.g. "NotCoprime".
std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::int64_t> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// Offending element for NotMinimal, offending index for IndexOutOfRange.
  std::optional<std::int64_t> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> value_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message,
                        std::optional<std::int64_t> value = std::nullopt);

}  // namespace nsg

#endif  // NSG_ERROR_HPP
