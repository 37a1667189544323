#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "mbonacci/bigint.hpp"

namespace mbonacci {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order/label mismatch or malformed recurrence data.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A combinatorial enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(BigInt count, std::uint64_t cap)
      : Error("enumeration of " + to_string(count) + " terms exceeds cap " +
              std::to_string(cap)),
        count_(std::move(count)),
        cap_(cap) {}

  const BigInt& count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  BigInt count_;
  std::uint64_t cap_;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

/// A numeric iteration did not reach its tolerance.
class NotConverged : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Lex, parse and evaluation failures; offset is a byte index into the input.
class ExprError : public Error {
 public:
  ExprError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class BfileError : public Error {
 public:
  BfileError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mbonacci
