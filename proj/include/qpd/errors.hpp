#pragma once

#include <stdexcept>
#include <string>

namespace qpd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

struct BadArityError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct IndistinguishableError : Error {
  using Error::Error;
};

struct NoAxisError : Error {
  using Error::Error;
};

struct UnexpectedPatternError : Error {
  using Error::Error;
};

struct ZeroSupportError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qpd
