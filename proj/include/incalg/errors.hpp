#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace incalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::size_t n, std::size_t cap)
      : Error("size " + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
        requested(n),
        cap(cap) {}
  std::size_t requested;
  std::size_t cap;
};

class NotALatticeError : public Error {
 public:
  using Error::Error;
};

class NotAnAntichain : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NotDistributive : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class ZeroModule : public Error {
 public:
  ZeroModule() : Error("operation undefined on the zero module") {}
};

class LengthExceeded : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class DimCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when two independent computations of the same quantity disagree.
/// Always an implementation bug, never a data error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace incalg
