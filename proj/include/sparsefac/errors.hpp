#pragma once

#include <stdexcept>
#include <string>

namespace sparsefac {

class SparsefacError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public SparsefacError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : SparsefacError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class ArityError : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class DivisionByZero : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

// Contract violations: surface as exit code 2 in the CLI.
class PromiseViolation : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class CapError : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class InterpolationFailure : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class NotInCodomain : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class ZeroPolynomialError : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

class InternalError : public SparsefacError {
 public:
  using SparsefacError::SparsefacError;
};

}  // namespace sparsefac
