#pragma once

// Scalar bedrock: complex carrier, Gamma, Pochhammer symbols and
// compensated accumulation.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hyperverify {

using Complex = std::complex<double>;

namespace num {

/// Distance from a nonpositive integer below which Gamma reports a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// True when z lies within `tol` of one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z, double tol = kPoleTolerance);

bool is_finite(Complex z) noexcept;

/// Rising factorial (a, n) = a(a+1)...(a+n-1), with (a, 0) = 1.
/// Computed as a running product; zero results are legal.
Complex pochhammer(Complex a, int n);

/// Precomputed (base, k) for k = 0..N. values[k+1] == values[k] * (base + k)
/// bit for bit, so it agrees exactly with pochhammer().
struct PochhammerTable {
  Complex base;
  std::vector<Complex> values;

  const Complex& operator[](std::size_t k) const { return values[k]; }
  std::size_t size() const noexcept { return values.size(); }
  int max_index() const noexcept { return static_cast<int>(values.size()) - 1; }

  /// Extends the table in place up to index `n`.
  void extend_to(int n);
};

PochhammerTable pochhammer_table(Complex a, int n);

/// Lanczos (g = 7, 9 terms) with reflection for Re(x) < 1/2.
/// Throws PoleError within kPoleTolerance of a nonpositive integer.
Complex gamma(Complex x);

/// Neumaier's variant of Kahan summation, applied per component.
class NeumaierSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }
  double raw_sum() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexAccumulator {
 public:
  /// Throws OverflowError if the running sum leaves the binary64 range.
  void add(Complex v);
  /// Adds without the overflow check; for callers that validate afterwards.
  void add_unchecked(Complex v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

/// Compensated sum of `terms`. Throws OverflowError on a non-finite partial sum.
Complex comp_sum(std::span<const Complex> terms);

/// Exact n! for n <= 20, as an integer.
unsigned long long factorial_u64(int n);

}  // namespace num
}  // namespace hyperverify
