#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when an input breaks a general-position requirement. Carries the
/// offending index tuples when they are known.
class DegeneracyError : public Error {
 public:
  explicit DegeneracyError(const std::string& what) : Error(what) {}
  DegeneracyError(const std::string& what, std::vector<std::vector<std::size_t>> witnesses)
      : Error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<std::vector<std::size_t>>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::vector<std::size_t>> witnesses_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(location) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a data condition.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcover
