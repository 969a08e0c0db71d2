#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hrpb {

// Root of the toolkit's exception hierarchy. Everything thrown on purpose
// derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a precondition (empty vector, zero
// dimension, non-finite input, out-of-range argument).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Two operands whose dimensions or bit widths must agree do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input bytes could not be decoded. Carries the offset at which
// parsing stopped making sense.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t byte_offset)
      : Error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::uint64_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::uint64_t byte_offset_;
};

// The container was recognized but its magic, version, or method tag is
// not one this build can handle.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The container decoded cleanly but its contents break an invariant the
// writer is required to uphold (for example nonzero padding bits).
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// Optimization reached a non-finite loss. Carries the epoch during which
// the value first went bad.
class TrainingDivergedError : public Error {
 public:
  TrainingDivergedError(const std::string& what, std::size_t epoch)
      : Error(what + " (epoch " + std::to_string(epoch) + ")"), epoch_(epoch) {}

  std::size_t epoch() const noexcept { return epoch_; }

 private:
  std::size_t epoch_;
};

// A rank correlation was requested for a sequence with no variation.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

// A filesystem operation failed. The message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hrpb
