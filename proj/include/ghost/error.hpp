#pragma once

#include <stdexcept>
#include <string>

namespace ghost {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (odd weight, wrong component, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An explicit w-value was not given to enough p-adic digits to decide a valuation.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Truncation degree hit the hard cap before the slope prefix could be certified.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// A computation needs data this library cannot produce (true Hecke slopes).
class ExternalDataRequired : public Error {
 public:
  using Error::Error;
};

}  // namespace ghost
