#pragma once

#include <stdexcept>
#include <string>

namespace xns {

// Every failure raised by the library derives from Error so callers can map
// categories onto exit codes without knowing the full hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// An interval comparison could not be decided, or a width target was not
// reached, at the current working precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class BadLevel : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class BadSubgroup : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not: always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class IndependenceFailure : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

class AllOrdersZero : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace xns
