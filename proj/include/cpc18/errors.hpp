#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpc18 {

// Bad input data or a violated operation contract. CLI maps this to exit 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data file; line is 1-based, 0 when unknown.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : ValidationError(line ? msg + " (line " + std::to_string(line) + ")" : msg),
        line(line) {}
  std::size_t line;
};

// A model was asked about a problem outside its supported domain
// (e.g. an ambiguous problem in strict mode).
class UnsupportedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Feature schema of a matrix does not match the model it is used with.
class SchemaMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace cpc18
