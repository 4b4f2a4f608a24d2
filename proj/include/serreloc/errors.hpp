#pragma once

#include <stdexcept>
#include <string>

namespace serreloc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds one of the enumeration guards.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independently computed answers disagree. Indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace serreloc
