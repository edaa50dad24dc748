#include "hyperverify/orthopoly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperverify/errors.hpp"
#include "hyperverify/hyper.hpp"

namespace hyperverify::ortho {

namespace {

void check_degree(int n, const char* where) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument(std::string(where) + ": degree " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

Complex laguerre(const LaguerreSpec& spec) {
  check_degree(spec.n, "laguerre");
  const Complex b = spec.alpha + 1.0;
  hyper::check_denominators({b}, spec.n, "laguerre");
  if (spec.n == 0) return {1.0, 0.0};
  // (b, n) / n! as a running product of ratios; stays in range up to kMaxDegree
  Complex lead{1.0, 0.0};
  for (int k = 0; k < spec.n; ++k) lead *= (b + static_cast<double>(k)) / static_cast<double>(k + 1);
  return lead * hyper::pfq_value({Complex{-static_cast<double>(spec.n), 0.0}}, {b}, spec.x);
}

std::vector<Complex> laguerre_table(int nmax, Complex alpha, Complex x) {
  check_degree(nmax, "laguerre_table");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  out.emplace_back(1.0, 0.0);
  if (nmax == 0) return out;
  out.push_back(alpha + 1.0 - x);
  for (int k = 1; k < nmax; ++k) {
    const double kd = static_cast<double>(k);
    const Complex next = ((2.0 * kd + 1.0 + alpha - x) * out[k] - (kd + alpha) * out[k - 1]) /
                         (kd + 1.0);
    out.push_back(next);
  }
  return out;
}

std::vector<Complex> hermite_table(int nmax, Complex z) {
  check_degree(nmax, "hermite_table");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  out.emplace_back(1.0, 0.0);
  if (nmax == 0) return out;
  out.push_back(2.0 * z);
  for (int k = 1; k < nmax; ++k) {
    out.push_back(2.0 * z * out[k] - 2.0 * static_cast<double>(k) * out[k - 1]);
  }
  return out;
}

Complex hermite(int n, Complex z) {
  check_degree(n, "hermite");
  return hermite_table(n, z).back();
}

std::pair<Complex, Complex> hermite_parity_check(int m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("hermite_parity_check: t must be positive");
  const auto table = hermite_table(2 * m + 1, Complex{0.0, t});
  return {table[static_cast<std::size_t>(2 * m)], table[static_cast<std::size_t>(2 * m + 1)]};
}

Complex hermite_via_laguerre(int n, Complex t) {
  check_degree(n, "hermite_via_laguerre");
  const int m = n / 2;
  const bool odd = (n % 2) != 0;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  double factor = sign * std::ldexp(1.0, n);
  for (int k = 2; k <= m; ++k) factor *= static_cast<double>(k);
  const Complex l = laguerre({m, Complex{odd ? 0.5 : -0.5, 0.0}, t * t});
  return odd ? factor * t * l : factor * l;
}

}  // namespace hyperverify::ortho
