#include "hyperverify/bailey.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

namespace hyperverify::bailey {

namespace {

// mu and nu are total: negative indices read as zero.
Complex at(const Sequence& s, int p, int q) {
  if (p < 0 || q < 0) return {0.0, 0.0};
  return s(p, q);
}

void check_index(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("bailey: negative index");
}

}  // namespace

bool support_holds(const BaileyScheme& scheme) {
  const int edge = scheme.support + 1;
  for (int k = 0; k <= edge; ++k) {
    for (auto [p, q] : {std::pair{edge, k}, std::pair{k, edge}}) {
      if (scheme.alpha(p, q) != Complex{0.0, 0.0}) return false;
      if (scheme.delta(p, q) != Complex{0.0, 0.0}) return false;
    }
  }
  return true;
}

Complex bailey_beta(const BaileyScheme& scheme, int m, int n) {
  check_index(m, n);
  std::vector<Complex> terms;
  const int pmax = std::min(m, scheme.support);
  const int qmax = std::min(n, scheme.support);
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= qmax; ++q) {
      terms.push_back(scheme.alpha(p, q) * at(scheme.mu, m - p, n - q) *
                      at(scheme.nu, m + p, n + q));
    }
  }
  return num::comp_sum(terms);
}

Complex bailey_gamma(const BaileyScheme& scheme, int m, int n) {
  check_index(m, n);
  std::vector<Complex> terms;
  for (int p = m; p <= scheme.support; ++p) {
    for (int q = n; q <= scheme.support; ++q) {
      terms.push_back(scheme.delta(p, q) * at(scheme.mu, p - m, q - n) *
                      at(scheme.nu, p + m, q + n));
    }
  }
  return num::comp_sum(terms);
}

BaileySides bailey_sides(const BaileyScheme& scheme) {
  if (scheme.support < 0) throw std::invalid_argument("bailey: negative support");
  std::vector<Complex> left;
  std::vector<Complex> right;
  for (int m = 0; m <= scheme.support; ++m) {
    for (int n = 0; n <= scheme.support; ++n) {
      left.push_back(scheme.alpha(m, n) * bailey_gamma(scheme, m, n));
      right.push_back(bailey_beta(scheme, m, n) * scheme.delta(m, n));
    }
  }
  return {num::comp_sum(left), num::comp_sum(right)};
}

double bailey_identity_residual(const BaileyScheme& scheme) {
  const BaileySides s = bailey_sides(scheme);
  const double a = std::abs(s.alpha_gamma);
  const double b = std::abs(s.beta_delta);
  return std::abs(s.alpha_gamma - s.beta_delta) / (1.0 + std::max(a, b));
}

Complex kronecker_origin(int p, int q) {
  return (p == 0 && q == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
}

BaileyScheme all_ones_scheme(int support) {
  if (support < 0) throw std::invalid_argument("all_ones_scheme: negative support");
  auto boxed = [support](int p, int q) {
    return (p <= support && q <= support) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  };
  auto one = [](int, int) { return Complex{1.0, 0.0}; };
  return {boxed, boxed, one, one, support};
}

namespace {

// Row-major (size x size) table, zero outside.
Sequence tabulated(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> numer(-9, 9);
  std::uniform_int_distribution<int> denom(1, 8);
  auto values = std::make_shared<std::vector<Complex>>();
  values->reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int k = 0; k < size * size; ++k) {
    const double re = static_cast<double>(numer(rng)) / denom(rng);
    const double im = static_cast<double>(numer(rng)) / denom(rng);
    values->emplace_back(re, im);
  }
  return [values, size](int p, int q) {
    if (p < 0 || q < 0 || p >= size || q >= size) return Complex{0.0, 0.0};
    return (*values)[static_cast<std::size_t>(p) * static_cast<std::size_t>(size) +
                     static_cast<std::size_t>(q)];
  };
}

}  // namespace

BaileyScheme random_scheme(std::uint64_t seed, int max_support) {
  if (max_support < 0) throw std::invalid_argument("random_scheme: negative support");
  std::mt19937_64 rng(seed);
  const int support = std::uniform_int_distribution<int>(0, max_support)(rng);
  BaileyScheme s;
  s.support = support;
  s.alpha = tabulated(rng, support + 1);
  s.delta = tabulated(rng, support + 1);
  s.mu = tabulated(rng, support + 1);
  s.nu = tabulated(rng, 2 * support + 1);
  return s;
}

}  // namespace hyperverify::bailey
