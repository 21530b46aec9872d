#ifndef KMONOID_ERRORS_HPP_
#define KMONOID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kmonoid {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixing degrees or elements of different ranks/presentations.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Syntax errors in presentation/action/code files. Carries a 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Violated operation precondition (factorization range, contract errors,
// group-membership requirements, unknown letters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmonoid

#endif  // KMONOID_ERRORS_HPP_
