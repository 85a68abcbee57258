#pragma once

#include <stdexcept>
#include <string>

namespace hlb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Requested degree exceeds the configured powering cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Coefficient magnitude left the double range while powering.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int power)
      : Error(what), power_(power) {}
  int power() const { return power_; }

 private:
  int power_;
};

/// A refinement did not reach its tolerance; carries the best value seen.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best)
      : Error(what), best_(best) {}
  double best_value() const { return best_; }

 private:
  double best_;
};

}  // namespace hlb
