#include <cmath>

#include "doctest.h"
#include "hyperverify/errors.hpp"
#include "hyperverify/hyper.hpp"
#include "reference.hpp"

using hyperverify::Complex;
namespace hyper = hyperverify::hyper;

namespace {

double err(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("pfq basics") {
  CHECK(err(hyper::pfq_value({}, {}, 1.0), 2.718281828459045) < 1e-15);
  CHECK(err(hyper::pfq_value({-1.0}, {2.0}, 0.4), 0.8) < 1e-16);
  CHECK(hyper::pfq_value({0.3, 1.1}, {2.7}, 0.0) == Complex{1.0, 0.0});
  CHECK(err(hyper::pfq_value({0.3, 0.7}, {1.9}, 0.6), 1.0894648007858961) < 1e-14);
  CHECK(err(hyper::pfq_value({1.0, 1.0, 1.0}, {2.0, 2.0}, -0.5), 0.8968284138472924) < 1e-14);
  CHECK(err(hyper::pfq_value({-7.0}, {1.5}, 2.3), 0.33690421240902311) < 1e-14);
  CHECK(err(hyper::pfq_value({}, {1.3}, -0.01), 0.99232439783421466) < 1e-15);
}

TEST_CASE("pfq terminating series stops at its last term") {
  const auto r = hyper::pfq({-3.0}, {0.5}, 100.0);
  CHECK(r.diagnostics.converged);
  CHECK(r.diagnostics.order_used == 3);
  // 1 - 3*100/0.5 + 3*1e4/0.75 - 1e6/1.875
  CHECK(err(r.value, 1.0 - 600.0 + 40000.0 - 533333.3333333334) < 1e-9);
  CHECK(hyper::terminating_index({2.0, -4.0, -2.0}) == 2);
  CHECK(hyper::terminating_index({2.5}) == -1);
}

TEST_CASE("pfq errors") {
  CHECK_THROWS_AS(hyper::pfq_value({1.0}, {-2.0}, 0.1), hyperverify::DegenerateParameter);
  // a zero divisor beyond the last term is harmless
  CHECK_NOTHROW(hyper::pfq_value({-1.0}, {-2.0}, 0.1));
  CHECK_THROWS_AS(hyper::pfq_value({1.0, 1.0, 1.0}, {2.0}, 0.1), hyperverify::ConvergenceViolation);
  // outside the unit disk a 2F1 never meets the tail test
  CHECK_THROWS_AS(hyper::pfq_value({1.0, 1.0}, {2.0}, 1.5), hyperverify::TailTooLarge);
  hyperverify::TruncationPolicy tight;
  tight.max_shell = 5;
  tight.initial_shell = 5;
  CHECK_THROWS_AS(hyper::pfq_value({}, {}, 10.0, tight), hyperverify::TailTooLarge);
}

TEST_CASE("pfq terms") {
  const auto t = hyper::pfq_terms({1.0}, {}, 0.5, 4);
  REQUIRE(t.size() == 4);
  CHECK(t[3] == Complex{0.125, 0.0});
}

TEST_CASE("kdf") {
  const auto e = hyper::kdf({}, 0.3, 0.2);
  CHECK(e.diagnostics.converged);
  CHECK(err(e.value, std::exp(0.5)) < 1e-15);

  hyper::KdFSpec spec{{1.1}, {1.7}, {}, {}, {}, {}};
  CHECK(err(hyper::kdf(spec, 0.1, 0.15).value, 1.1786525462954593) < 1e-14);

  hyper::KdFSpec mixed{{0.4}, {1.3}, {2.1}, {0.9}, {0.7}, {1.6}};
  const Complex merged = hyper::pfq_value({0.4, 2.1}, {1.3, 0.9}, 0.2);
  CHECK(err(hyper::kdf(mixed, 0.2, 0.0).value, merged) < 1e-15);

  hyper::KdFSpec open{{1.0, 1.0}, {}, {}, {}, {}, {}};
  CHECK_THROWS_AS(hyper::kdf(open, 0.1, 0.1), hyperverify::ConvergenceViolation);
}

TEST_CASE("kdf against a fixed square sum") {
  hyper::KdFSpec spec{{0.8}, {1.9}, {1.2}, {2.2}, {}, {0.6}};
  const auto ref = reference::double_sum(60, [](int m, int n) {
    using reference::rising;
    using reference::factorial;
    const reference::real v = rising(0.8L, m + n) * rising(1.2L, m) * std::pow(0.3L, m) *
                              std::pow(-0.25L, n) /
                              (rising(1.9L, m + n) * rising(2.2L, m) * rising(0.6L, n) *
                               factorial(m) * factorial(n));
    return std::complex<reference::real>(v, 0);
  });
  const Complex got = hyper::kdf(spec, 0.3, -0.25).value;
  CHECK(std::abs(got.real() - static_cast<double>(ref.real())) < 1e-14);
}

TEST_CASE("Bessel functions") {
  CHECK(hyper::bessel_j(0.0, 0.0) == Complex{1.0, 0.0});
  CHECK(hyper::bessel_i(0.0, 0.0) == Complex{1.0, 0.0});
  CHECK(hyper::bessel_j(1.5, 0.0) == Complex{0.0, 0.0});
  CHECK(err(hyper::bessel_j(0.5, 0.7), 0.61436106679126507) < 1e-15);
  CHECK(err(hyper::bessel_i(0.5, 0.9), 0.86334591167731507) < 1e-15);
  CHECK(err(hyper::bessel_j(2.5, 20.0), -0.17258019384387642) < 1e-13);
  CHECK(std::abs(hyper::bessel_i(0.0, 8.0).real() / 427.56411572180479 - 1.0) < 1e-14);
}

TEST_CASE("Bessel half-integer closed forms") {
  const double pi = std::acos(-1.0);
  for (double z = 0.1; z < 12.0; z += 0.45) {
    const double s = std::sqrt(2.0 / (pi * z));
    CHECK(err(hyper::bessel_j(0.5, z), s * std::sin(z)) < 1e-10);
    CHECK(err(hyper::bessel_j(-0.5, z), s * std::cos(z)) < 1e-10);
    CHECK(err(hyper::bessel_j(1.5, z), s * (std::sin(z) / z - std::cos(z))) < 1e-10);
    CHECK(std::abs(hyper::bessel_i(0.5, z).real() / (s * std::sinh(z)) - 1.0) < 1e-10);
  }
}

TEST_CASE("quadratic 2F1") {
  CHECK(hyper::gauss2f1_quadratic(0.7, 1.1, 0.0) == Complex{1.0, 0.0});
  CHECK(err(hyper::gauss2f1_quadratic(0.6, 1.4, 0.36), 1.25) < 1e-15);
  for (double p : {0.7, 1.3, 2.2}) {
    for (double pp : {0.6, 1.1, 2.9}) {
      for (double z = -0.8; z <= 0.8001; z += 0.1) {
        const Complex series =
            hyper::pfq_value({(p + pp - 1.0) / 2.0, (p + pp) / 2.0}, {p + pp - 1.0}, z);
        CHECK(err(hyper::gauss2f1_quadratic(p, pp, z), series) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(hyper::gauss2f1_quadratic(1.0, 1.0, 1.0), hyperverify::BranchError);
}
