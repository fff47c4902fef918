#pragma once

#include <stdexcept>
#include <string>

namespace coincide {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (problem files, tables, labels).
class InputError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace coincide
