#pragma once

#include <stdexcept>
#include <string>

namespace hyperlag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects that must share a uniformity r do not.
class UniformityMismatch : public Error {
 public:
  using Error::Error;
};

/// A vertex, rank, edge count or other argument is out of its valid range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlag
