#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarstroke {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite or out-of-range values fed to a constructor or API boundary.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Conic evaluation at a parameter where the rational denominator vanishes
/// (an external-segment asymptote).
class DegenerateEvaluation : public Error {
public:
  using Error::Error;
};

/// All control points of a segment are colocated; the stroked region is empty.
class ZeroLengthSegment : public Error {
public:
  using Error::Error;
};

/// Curvature requested at a parameter with zero gradient.
class UndefinedCurvature : public Error {
public:
  using Error::Error;
};

/// Angle handed to the interval solver lies outside the interval's swept range.
class AngleOutOfInterval : public Error {
public:
  using Error::Error;
};

/// Join requested between segments whose endpoints do not meet.
class DisconnectedSegments : public Error {
public:
  using Error::Error;
};

/// Dash pattern with no positive entry.
class EmptyPattern : public Error {
public:
  using Error::Error;
};

/// Path-text syntax error. Carries the byte offset of the failure and a short
/// description of what was expected there.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace polarstroke
