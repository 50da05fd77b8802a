#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace quadlr {

// Base for every error raised by the library. Precondition violations on
// quantum numbers use std::domain_error / std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Species file could not be tokenized; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A SpeciesPair breaks one of its physical invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Internal bookkeeping mismatch, e.g. a nonzero entry outside an m_J block.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace quadlr
