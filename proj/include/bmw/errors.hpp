#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace bmw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree parity or degree mismatch (odd n for fixed-point-free involutions, unequal degrees).
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A computation refused because its guard (degree, census size, enumeration size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Base for errors that name a pair (a_i, b_k). Indices are stored 0-based;
/// the message uses the 1-based labels.
class PairError : public Error {
 public:
  PairError(const std::string& what, std::uint32_t a, std::uint32_t b)
      : Error(what + "(a" + std::to_string(a + 1) + ",b" + std::to_string(b + 1) + ")"),
        a_(a),
        b_(b) {}

  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }

 private:
  std::uint32_t a_;
  std::uint32_t b_;
};

class UncoveredPair : public PairError {
 public:
  UncoveredPair(std::uint32_t a, std::uint32_t b) : PairError("UncoveredPair", a, b) {}
};

class DoublyCoveredPair : public PairError {
 public:
  DoublyCoveredPair(std::uint32_t a, std::uint32_t b) : PairError("DoublyCoveredPair", a, b) {}
};

class ConflictingPair : public PairError {
 public:
  ConflictingPair(std::uint32_t a, std::uint32_t b, std::string detail = {})
      : PairError("ConflictingPair" + (detail.empty() ? std::string() : "[" + detail + "]"), a, b),
        detail_(std::move(detail)) {}

  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

}  // namespace bmw
