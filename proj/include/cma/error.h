#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cma
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad dimensions, mismatched kinds,
/// violated preconditions).
class InputError : public Error
{
public:
  using Error::Error;
};

/// Syntax error in the expression language. `offset` is the byte offset of
/// the offending token in the source text.
class ParseError : public InputError
{
public:
  ParseError(const std::string& message, std::size_t offset)
      : InputError(message + " at offset " + std::to_string(offset)),
        _offset(offset)
  {
  }

  std::size_t offset() const { return _offset; }

private:
  std::size_t _offset;
};

/// Numerical failure: rank conditions not met, residuals above threshold.
class NumericError : public Error
{
public:
  using Error::Error;
};

/// Function evaluated outside its domain (ln of nonpositive, division by
/// zero, non-finite result).
class DomainError : public NumericError
{
public:
  using NumericError::NumericError;
};

/// An internal consistency gate failed (e.g. a structure matrix that does
/// not satisfy its own defining equation).
class ConsistencyError : public Error
{
public:
  using Error::Error;
};

} // namespace cma
