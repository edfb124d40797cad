#pragma once

#include <stdexcept>
#include <string>

namespace latcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input. The message names the line and field.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& field, const std::string& what)
      : Error("line " + std::to_string(line) + ", " + field + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& id) : Error("unknown vertex '" + id + "'") {}
};

/// The intersection form is singular where an invertible one is required.
class DegenerateFormError : public Error {
 public:
  using Error::Error;
};

/// A truncation region is unusable: the minimizer search diverged, a term
/// lies outside it, or it is too small for the requested check.
class RegionError : public Error {
 public:
  using Error::Error;
};

class BasisCapError : public Error {
 public:
  using Error::Error;
};

class NotStabilizedError : public Error {
 public:
  using Error::Error;
};

}  // namespace latcoh
