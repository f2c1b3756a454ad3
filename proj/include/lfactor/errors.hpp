#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfac {

enum class ErrorCode {
  InvalidCartan,
  InfiniteSystem,
  DimensionMismatch,
  UnsupportedFamily,
  NotARoot,
  NotDominant,
  GroupTooLarge,
  OrbitTooLarge,
  TooLarge,
  FreudenthalDenominatorZero,
  UnknownRepName,
  BadParameters,
  IncompleteDomain,
  HypothesesFail,
  NotPositive,
  HypothesisViolated,
  EmptyS,
  NoSeparator,
  NonTermination,
  NotQuasiMinuscule,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for the guard-style failures (inputs too large for desk-scale limits).
  bool is_guard() const noexcept {
    return code_ == ErrorCode::GroupTooLarge || code_ == ErrorCode::OrbitTooLarge ||
           code_ == ErrorCode::TooLarge || code_ == ErrorCode::InfiniteSystem;
  }

 private:
  ErrorCode code_;
};

}  // namespace lfac
