#pragma once

#include <stdexcept>
#include <string>

namespace doily {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range index, duplicate line, bad JSON shape.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (e.g. collinear(p, p)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds the search budget or representation limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An upstream stage produced something the next stage cannot build from.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// No isomorphism between the derived geometry and the reference.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace doily
