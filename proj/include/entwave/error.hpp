#pragma once

#include <stdexcept>
#include <string>

namespace entwave {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates an operation's precondition (bad order, non-positive
// scale, field that does not decay at the grid boundary, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The mother wavelet fails the admissibility condition.
class NonAdmissibleError : public Error {
 public:
  NonAdmissibleError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

// A truncated improper integral or series did not settle under refinement.
class DivergentError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated EWG1/EWC1/CSV input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace entwave
