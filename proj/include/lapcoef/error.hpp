#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapcoef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list does not describe a tree.
class InvalidTree : public Error {
 public:
  using Error::Error;
};

// Family or operation parameters out of their admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A transformation was requested at a site lacking the required local shape.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Work size above the configured guard and no override given.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lapcoef
