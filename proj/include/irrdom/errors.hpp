#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irrdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph parameters or operation arguments outside their documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Diameter and search are undefined on graphs with unreachable pairs.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based line number, 0 when the input was not line oriented.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Brute-force enumeration refused because the raw assignment count is over the cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace irrdom
