#pragma once

// Unevaluated-sum (hi + lo) arithmetic used internally where a term
// recurrence has to survive heavy cancellation. Not part of the public API.

#include <cmath>
#include <complex>

namespace hyperverify::detail {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT: implicit by intent
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const noexcept { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) noexcept {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) noexcept { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) noexcept { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) noexcept {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble ldexp(DoubleDouble a, int e) noexcept {
  return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)};
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) noexcept {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  const double q3 = r.hi / b.hi;
  DoubleDouble q = quick_two_sum(q1, q2);
  return q + DoubleDouble(q3);
}

/// Square root of a nonnegative value, one Newton step from the binary64 root.
inline DoubleDouble sqrt(DoubleDouble a) noexcept {
  if (a.hi <= 0.0) return DoubleDouble(0.0);
  const double r = std::sqrt(a.hi);
  const DoubleDouble err = a - two_prod(r, r);
  return two_sum(r, err.hi / (2.0 * r));
}

inline bool is_zero(DoubleDouble a) noexcept { return a.hi == 0.0 && a.lo == 0.0; }

struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  ComplexDD() = default;
  ComplexDD(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}
  explicit ComplexDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const noexcept { return {re.to_double(), im.to_double()}; }
  bool is_zero() const noexcept { return detail::is_zero(re) && detail::is_zero(im); }
  double magnitude() const noexcept { return std::hypot(re.hi, im.hi); }
};

inline ComplexDD operator-(const ComplexDD& a) noexcept { return {-a.re, -a.im}; }

inline ComplexDD operator-(const ComplexDD& a, const ComplexDD& b) noexcept {
  return {a.re - b.re, a.im - b.im};
}

inline ComplexDD operator*(const ComplexDD& a, DoubleDouble b) noexcept {
  return {a.re * b, a.im * b};
}

inline ComplexDD ldexp(const ComplexDD& a, int e) noexcept { return {ldexp(a.re, e), ldexp(a.im, e)}; }

inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b) noexcept {
  return {a.re + b.re, a.im + b.im};
}

inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b) noexcept {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexDD operator/(const ComplexDD& a, const ComplexDD& b) noexcept {
  if (b.im.hi == 0.0 && b.im.lo == 0.0) {
    return {a.re / b.re, a.im / b.re};
  }
  const DoubleDouble den = b.re * b.re + b.im * b.im;
  const DoubleDouble nr = a.re * b.re + a.im * b.im;
  const DoubleDouble ni = a.im * b.re - a.re * b.im;
  return {nr / den, ni / den};
}

/// (z + k) with k an integer, exact in the hi/lo representation.
inline ComplexDD shifted(std::complex<double> z, int k) noexcept {
  return {two_sum(z.real(), static_cast<double>(k)), DoubleDouble(z.imag())};
}

}  // namespace hyperverify::detail
