#include <cmath>
#include <cstdint>
#include <limits>

#include "doctest.h"
#include "hyperverify/bailey.hpp"

using hyperverify::Complex;
namespace bailey = hyperverify::bailey;

TEST_CASE("beta and gamma with the all-ones scheme") {
  const auto s = bailey::all_ones_scheme(2);
  CHECK(bailey::support_holds(s));
  CHECK(bailey::bailey_beta(s, 1, 1) == Complex{4.0, 0.0});
  CHECK(bailey::bailey_gamma(s, 0, 0) == Complex{9.0, 0.0});
  CHECK(bailey::bailey_gamma(s, 3, 0) == Complex{0.0, 0.0});
  for (int m = 0; m <= 4; ++m) CHECK(bailey::bailey_identity_residual(bailey::all_ones_scheme(m)) <= 1e-13);
}

TEST_CASE("Kronecker kernel") {
  auto s = bailey::random_scheme(11, 3);
  s.mu = bailey::kronecker_origin;
  for (int m = 0; m <= s.support; ++m) {
    for (int n = 0; n <= s.support; ++n) {
      CHECK(std::abs(bailey::bailey_beta(s, m, n) - s.alpha(m, n) * s.nu(2 * m, 2 * n)) == 0.0);
      CHECK(std::abs(bailey::bailey_gamma(s, m, n) - s.delta(m, n) * s.nu(2 * m, 2 * n)) == 0.0);
    }
  }
}

TEST_CASE("zero alpha") {
  auto s = bailey::all_ones_scheme(3);
  s.alpha = [](int, int) { return Complex{0.0, 0.0}; };
  CHECK(bailey::bailey_beta(s, 2, 1) == Complex{0.0, 0.0});
  CHECK(bailey::bailey_identity_residual(s) == 0.0);
}

TEST_CASE("random schemes") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto s = bailey::random_scheme(seed, 4);
    CHECK(s.support <= 4);
    CHECK(bailey::support_holds(s));
    CHECK(bailey::bailey_identity_residual(s) <= 1e-12);
  }
}

TEST_CASE("random schemes are reproducible") {
  const auto a = bailey::random_scheme(42, 4);
  const auto b = bailey::random_scheme(42, 4);
  CHECK(a.support == b.support);
  for (int m = 0; m <= 2 * a.support; ++m) {
    for (int n = 0; n <= 2 * a.support; ++n) CHECK(a.nu(m, n) == b.nu(m, n));
  }
}

TEST_CASE("linearity in alpha") {
  const auto s = bailey::random_scheme(5, 4);
  auto scaled = s;
  scaled.alpha = [a = s.alpha](int p, int q) { return 3.0 * a(p, q); };
  const auto base = bailey::bailey_sides(s);
  const auto three = bailey::bailey_sides(scaled);
  const double ulp = std::numeric_limits<double>::epsilon();
  CHECK(std::abs(three.alpha_gamma - 3.0 * base.alpha_gamma) <= 4 * ulp * std::abs(three.alpha_gamma) + 1e-300);
  CHECK(std::abs(three.beta_delta - 3.0 * base.beta_delta) <= 4 * ulp * std::abs(three.beta_delta) + 1e-300);
}

TEST_CASE("support violation is detected") {
  auto s = bailey::all_ones_scheme(2);
  s.delta = [](int, int) { return Complex{1.0, 0.0}; };
  CHECK_FALSE(bailey::support_holds(s));
}
