#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acfgm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: dimension mismatch, nonpositive stepsize, malformed data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operation called in a state where it is undefined (e.g. x0 == x1).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Configuration rejected at construction time.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data missing, unreadable or malformed.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A NaN or Inf showed up where only finite reals are allowed.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A solver run cannot continue.
class Diverged : public Error {
 public:
  Diverged(const std::string& what, std::size_t iteration, std::size_t trials = 0)
      : Error(what), iteration_(iteration), trials_(trials) {}

  std::size_t iteration() const noexcept { return iteration_; }
  std::size_t trials() const noexcept { return trials_; }

 private:
  std::size_t iteration_;
  std::size_t trials_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace acfgm
