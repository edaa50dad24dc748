#include "hyperverify/numkernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperverify/errors.hpp"

namespace hyperverify::num {

bool is_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative index");
  Complex prod{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    prod *= a + static_cast<double>(k);
  }
  if (!is_finite(prod)) {
    throw OverflowError("pochhammer(" + std::to_string(a.real()) + ", " + std::to_string(n) +
                        ") overflows binary64");
  }
  return prod;
}

void PochhammerTable::extend_to(int n) {
  if (values.empty()) values.emplace_back(1.0, 0.0);
  values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = max_index(); k < n; ++k) {
    // same operation order as pochhammer(): prod *= base + k
    Complex next = values.back();
    next *= base + static_cast<double>(k);
    if (!is_finite(next)) {
      throw OverflowError("pochhammer_table: entry " + std::to_string(k + 1) + " overflows");
    }
    values.push_back(next);
  }
}

PochhammerTable pochhammer_table(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer_table: negative size");
  PochhammerTable t{a, {}};
  t.extend_to(n);
  return t;
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
  // z has Re(z) >= 1/2 here
  z -= 1.0;
  Complex acc{kLanczosCoeff[0], 0.0};
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
    acc += kLanczosCoeff[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  return sqrt_two_pi * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

}  // namespace

Complex gamma(Complex x) {
  if (!is_finite(x)) throw std::invalid_argument("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at " + std::to_string(x.real()));
  }
  // Exact for small positive integers.
  if (x.imag() == 0.0 && x.real() == std::round(x.real()) && x.real() >= 1.0 &&
      x.real() <= 21.0) {
    return {static_cast<double>(factorial_u64(static_cast<int>(x.real()) - 1)), 0.0};
  }
  Complex result;
  if (x.real() < 0.5) {
    const double pi = std::numbers::pi;
    result = pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
  } else {
    result = lanczos_gamma(x);
  }
  if (!is_finite(result)) throw OverflowError("gamma: result overflows binary64");
  return result;
}

void ComplexAccumulator::add(Complex v) {
  add_unchecked(v);
  if (!std::isfinite(re_.raw_sum()) || !std::isfinite(im_.raw_sum())) {
    throw OverflowError("compensated sum: partial sum left binary64 range");
  }
}

Complex comp_sum(std::span<const Complex> terms) {
  ComplexAccumulator acc;
  for (const Complex& t : terms) acc.add(t);
  return acc.value();
}

unsigned long long factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64: n outside [0, 20]");
  unsigned long long f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
  return f;
}

}  // namespace hyperverify::num
