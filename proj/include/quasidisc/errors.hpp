#pragma once

#include <stdexcept>
#include <string>

namespace quasidisc {

/// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Res(0, 0) is undefined.
class BothZeroError : public Error {
 public:
  BothZeroError() : Error("resultant of two zero polynomials") {}
};

class DegreeTooLowError : public Error {
 public:
  using Error::Error;
};

/// A family's parameters violate the recurrence's standing assumptions.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// A leading coefficient vanished while generating a sequence.
class DegreeDroppedError : public Error {
 public:
  using Error::Error;
};

class ConditionViolatedError : public Error {
 public:
  using Error::Error;
};

/// The closed form does not apply to this instance (e.g. F vanishes at a root).
class HypothesisViolatedError : public Error {
 public:
  using Error::Error;
};

/// The leading x-coefficient of the B-polynomial vanished for this c.
class DegenerateBError : public Error {
 public:
  using Error::Error;
};

/// A lower hypergeometric parameter hits a pole before the series terminates.
class LowerPoleError : public Error {
 public:
  using Error::Error;
};

/// A family spec document is malformed; the message names the offending field.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasidisc
