/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_ERROR_HPP
#define CPSHRINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cpshrink {

enum class ErrorKind {
  PadTooSmall,
  NonFinite,
  NotHermitian,
  DimensionMismatch,
  NotIsometry,
  InfeasibleShape,
  ConvergenceFailure,
  InvalidNorm,
  InvalidChannel,
  Parse,
};

const char *to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::PadTooSmall:
    return "PadTooSmall";
  case ErrorKind::NonFinite:
    return "NonFinite";
  case ErrorKind::NotHermitian:
    return "NotHermitian";
  case ErrorKind::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorKind::NotIsometry:
    return "NotIsometry";
  case ErrorKind::InfeasibleShape:
    return "InfeasibleShape";
  case ErrorKind::ConvergenceFailure:
    return "ConvergenceFailure";
  case ErrorKind::InvalidNorm:
    return "InvalidNorm";
  case ErrorKind::InvalidChannel:
    return "InvalidChannel";
  case ErrorKind::Parse:
    return "Parse";
  }
  return "Unknown";
}

} // namespace cpshrink

#endif // CPSHRINK_ERROR_HPP
