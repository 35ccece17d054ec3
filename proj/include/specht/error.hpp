#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specht {

enum class ErrorKind {
  InvalidInput,
  SizeMismatch,
  NotPrime,
  EmptyPartition,
  SizeError,
  NotTotallyOrdered,
  FamilyIncomplete,
  NotStabilized,
  TooLarge,
  SearchExhausted,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EmptyPartition: return "EmptyPartition";
    case ErrorKind::SizeError: return "SizeError";
    case ErrorKind::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorKind::FamilyIncomplete: return "FamilyIncomplete";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

/// Resource ceilings (as opposed to bad input).
constexpr bool is_limit(ErrorKind kind) {
  return kind == ErrorKind::TooLarge || kind == ErrorKind::SearchExhausted ||
         kind == ErrorKind::NotStabilized;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace specht
