#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperverify {

/// Base of every numeric failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma (or something built on it) evaluated at a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A partial sum or product left the binary64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A denominator parameter hits a nonpositive integer inside the summed range.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// pFq with p > q + 1 that neither terminates nor sits at z = 0.
class ConvergenceViolation : public Error {
 public:
  using Error::Error;
};

/// Argument outside the real branch region of an algebraic closed form.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// The truncation policy was exhausted before the tail criterion held.
/// Carries the partial sum so callers can still report it.
class TailTooLarge : public Error {
 public:
  TailTooLarge(const std::string& what, std::complex<double> partial, int order,
               double tail, double rounding)
      : Error(what), partial_(partial), order_(order), tail_(tail), rounding_(rounding) {}

  std::complex<double> partial() const noexcept { return partial_; }
  int order() const noexcept { return order_; }
  double tail_estimate() const noexcept { return tail_; }
  double rounding_estimate() const noexcept { return rounding_; }

 private:
  std::complex<double> partial_;
  int order_;
  double tail_;
  double rounding_;
};

}  // namespace hyperverify
