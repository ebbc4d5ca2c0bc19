#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfrigid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (matrix strings, presentations, catalog ids).
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public InputError {
 public:
  using InputError::InputError;
};

class NotUnimodular : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadModulus : public DomainError {
 public:
  using DomainError::DomainError;
};

// Raised by the class census for (tr, det) = (+-2, 1), whose classes
// form the infinite family +-(1 n; 0 1).
class InfiniteFamily : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

class CatalogMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pfrigid
