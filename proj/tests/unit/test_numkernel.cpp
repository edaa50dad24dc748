#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "hyperverify/errors.hpp"
#include "hyperverify/numkernel.hpp"

#ifdef HYPERVERIFY_HAVE_BOOST_MP
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

using hyperverify::Complex;
namespace num = hyperverify::num;

TEST_CASE("pochhammer small values") {
  CHECK(num::pochhammer(1.0, 4) == Complex{24.0, 0.0});
  CHECK(num::pochhammer(Complex{0.3, -2.0}, 0) == Complex{1.0, 0.0});
  CHECK(num::pochhammer(-2.0, 4) == Complex{0.0, 0.0});
  CHECK(num::pochhammer(3.0, 2) == Complex{12.0, 0.0});
  CHECK(num::pochhammer(-2.0, 2) == Complex{2.0, 0.0});
  CHECK_THROWS_AS(num::pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("pochhammer overflow") {
  CHECK_THROWS_AS(num::pochhammer(1.0, 200), hyperverify::OverflowError);
}

TEST_CASE("pochhammer table agrees bit for bit") {
  const auto t = num::pochhammer_table(1.0, 3);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == Complex{1.0, 0.0});
  CHECK(t[1] == Complex{1.0, 0.0});
  CHECK(t[2] == Complex{2.0, 0.0});
  CHECK(t[3] == Complex{6.0, 0.0});

  const auto h = num::pochhammer_table(0.5, 2);
  CHECK(h[1] == Complex{0.5, 0.0});
  CHECK(h[2] == Complex{0.75, 0.0});

  auto grow = num::pochhammer_table(Complex{0.37, 0.21}, 5);
  grow.extend_to(60);
  CHECK(grow.max_index() == 60);
  for (int k = 0; k <= 60; ++k) {
    CHECK(grow[static_cast<std::size_t>(k)] == num::pochhammer(Complex{0.37, 0.21}, k));
  }
}

TEST_CASE("gamma") {
  CHECK(num::gamma(1.0) == Complex{1.0, 0.0});
  CHECK(num::gamma(5.0) == Complex{24.0, 0.0});
  CHECK(std::abs(num::gamma(0.5) - 1.772453850905516) < 1e-14);
  CHECK(std::abs(num::gamma(-1.5) - 2.3632718012073547) < 1e-13);
  CHECK(std::abs(num::gamma(7.3) / 1271.4236336639088 - 1.0) < 1e-13);
  CHECK(std::abs(num::gamma(Complex{0.25, 1.0}) - Complex{0.099149758763453354, -0.51661774379288529}) <
        1e-13);
  CHECK_THROWS_AS(num::gamma(0.0), hyperverify::PoleError);
  CHECK_THROWS_AS(num::gamma(-3.0), hyperverify::PoleError);
  CHECK_THROWS_AS(num::gamma(200.0), hyperverify::OverflowError);
}

TEST_CASE("gamma matches std::tgamma on [0.1, 50]") {
  for (double x = 0.1; x <= 50.0; x += 0.37) {
    const double expect = std::tgamma(x);
    CHECK(std::abs(num::gamma(x).real() / expect - 1.0) < 1e-13);
  }
}

TEST_CASE("compensated summation") {
  std::vector<Complex> ones(10000, Complex{1.0, 0.0});
  CHECK(num::comp_sum(ones) == Complex{10000.0, 0.0});

  const std::vector<Complex> hard{1e16, 1.0, -1e16};
  CHECK(num::comp_sum(hard) == Complex{1.0, 0.0});
  double naive = 0.0;
  for (const Complex& c : hard) naive += c.real();
  CHECK(naive == 0.0);

  std::vector<Complex> series;
  double term = 1.0;
  for (int n = 0; n <= 20; ++n) {
    series.emplace_back(term, 0.0);
    term /= n + 1;
  }
  CHECK(std::abs(num::comp_sum(series).real() - 2.7182818284590452) < 1e-15);

  const double big = std::numeric_limits<double>::max();
  const std::vector<Complex> over{big, big};
  CHECK_THROWS_AS(num::comp_sum(over), hyperverify::OverflowError);
}

#ifdef HYPERVERIFY_HAVE_BOOST_MP
TEST_CASE("compensated summation against a 200-bit accumulator") {
  using wide = boost::multiprecision::cpp_bin_float_100;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-30.0, 30.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> terms;
    wide exact = 0;
    for (int k = 0; k < 500; ++k) {
      const double v = std::ldexp((rng() & 1) ? 1.0 : -1.0, static_cast<int>(mag(rng))) *
                       (1.0 + static_cast<double>(rng() >> 11) * 0x1p-53);
      terms.emplace_back(v, 0.0);
      exact += v;
    }
    const double got = num::comp_sum(terms).real();
    const double want = static_cast<double>(exact);
    CHECK(std::abs(got - want) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(want));
  }
}
#endif

TEST_CASE("factorials and pole test") {
  CHECK(num::factorial_u64(0) == 1ULL);
  CHECK(num::factorial_u64(20) == 2432902008176640000ULL);
  CHECK(num::is_nonpositive_integer(Complex{-3.0, 0.0}));
  CHECK(num::is_nonpositive_integer(Complex{0.0, 0.0}));
  CHECK_FALSE(num::is_nonpositive_integer(Complex{-3.0, 1e-3}));
  CHECK_FALSE(num::is_nonpositive_integer(Complex{1.0, 0.0}));
}
