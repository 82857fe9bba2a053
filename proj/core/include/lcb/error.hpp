#pragma once

#include <stdexcept>
#include <string>

namespace lcb {

// Base for every error the library raises on bad input or failed
// preconditions. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A northwest minor vanished (or went negative) where a chart needs it positive.
class ChartDomainError : public Error {
 public:
  ChartDomainError(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// The decomposition could not tell a pivot from noise.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcb
