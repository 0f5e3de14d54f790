#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kroncave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

// d < |lambda| + lambda_1: the caller has to enlarge d.
class PadTooSmall : public Error {
 public:
  using Error::Error;
};

// (lambda + mu) / 2 is not a partition; conditional checks count this as skipped.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class StabilizationNotDetected : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class StoreIO : public Error {
 public:
  using Error::Error;
};

// Raised only by implementation bugs: a character sum that is not divisible by
// n!, or a multiplicity that came out negative.
class InternalError : public Error {
 public:
  using Error::Error;
};

class InternalNonIntegral : public InternalError {
 public:
  using InternalError::InternalError;
};

class InternalNegative : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace kroncave
