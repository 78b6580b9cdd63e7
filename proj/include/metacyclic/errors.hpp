#pragma once

#include <stdexcept>
#include <string>

namespace metacyclic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Group parameters violate a defining inequality or congruence.
class ConstraintViolation : public Error {
public:
  using Error::Error;
};

/// The parameters describe a generalized quaternion group, which is not handled.
class FamilyIIIError : public Error {
public:
  using Error::Error;
};

/// An exhaustive computation would exceed the configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A quadruple (x1, x2, y, y2) lies outside the admissible parameter sets.
class NotInXiOmega : public Error {
public:
  using Error::Error;
};

class ParamMismatch : public Error {
public:
  using Error::Error;
};

class WrongBranch : public Error {
public:
  using Error::Error;
};

class WrongFamily : public Error {
public:
  using Error::Error;
};

class UnknownGenerator : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (parameter spec, element, word, quadruple).
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace metacyclic
