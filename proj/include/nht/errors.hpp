#pragma once

#include <stdexcept>
#include <string>

namespace nht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands have different moduli") {}
  using Error::Error;
};

/// Raised by mod_inv when gcd(a, m) != 1.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Structurally bad spec (size/coefficient count, forbidden zero coefficient).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Modular elimination met a pivot column with no invertible entry.
class NonUnitPivot : public Error {
 public:
  using Error::Error;
};

class CompositeModulusUnsupported : public Error {
 public:
  using Error::Error;
};

class MalformedFrame : public Error {
 public:
  using Error::Error;
};

class KeyMismatch : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input that cannot be decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nht
