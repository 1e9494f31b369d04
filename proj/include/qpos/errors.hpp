#pragma once

#include <stdexcept>
#include <string>

namespace qpos {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// exact_div found a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A Pochhammer product was requested with length < 0.
class NegativeLength : public Error {
 public:
  using Error::Error;
};

/// A q-exponent built from rational parameters is not an integer.
class NonIntegralExponent : public Error {
 public:
  using Error::Error;
};

/// Parameters outside an operation's domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpos
