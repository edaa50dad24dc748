#include <cmath>

#include "doctest.h"
#include "hyperverify/errors.hpp"
#include "hyperverify/orthopoly.hpp"
#include "reference.hpp"

using hyperverify::Complex;
namespace ortho = hyperverify::ortho;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("Laguerre by definition") {
  CHECK(ortho::laguerre({0, 0.7, 3.0}) == Complex{1.0, 0.0});
  CHECK(std::abs(ortho::laguerre({1, 0.5, 0.2}) - 1.3) < 1e-15);
  CHECK(std::abs(ortho::laguerre({2, 0.0, 2.0}) + 1.0) < 1e-15);
  CHECK(rel(ortho::laguerre({30, 1.5, 4.2}), 4.1503236643827539) < 1e-13);
  CHECK(rel(ortho::laguerre({12, -0.5, 3.1}), 0.71925995455119618) < 1e-13);
  CHECK_THROWS_AS(ortho::laguerre({3, -2.0, 0.5}), hyperverify::DegenerateParameter);
}

TEST_CASE("Laguerre table seeds") {
  const auto t = ortho::laguerre_table(6, 0.0, 0.0);
  for (const Complex& v : t) CHECK(v == Complex{1.0, 0.0});
  const auto s = ortho::laguerre_table(1, 0.5, 0.2);
  CHECK(s[0] == Complex{1.0, 0.0});
  CHECK(std::abs(s[1] - 1.3) < 1e-15);
}

TEST_CASE("Laguerre definition against recurrence and explicit sum") {
  for (double a : {-0.5, 0.0, 0.7, 2.4}) {
    for (double x : {-1.2, 0.3, 1.0, 2.5}) {
      const auto table = ortho::laguerre_table(30, a, x);
      for (int n = 0; n <= 30; ++n) {
        const Complex def = ortho::laguerre({n, a, x});
        CHECK(rel(def, table[static_cast<std::size_t>(n)]) < 1e-11);
        const double ref = static_cast<double>(reference::laguerre(n, a, x));
        CHECK(rel(def, ref) < 1e-11);
      }
    }
  }
}

TEST_CASE("Hermite") {
  CHECK(ortho::hermite(0, 0.4) == Complex{1.0, 0.0});
  CHECK(ortho::hermite(2, 1.0) == Complex{2.0, 0.0});
  CHECK(ortho::hermite(3, 1.0) == Complex{-4.0, 0.0});
  CHECK(rel(ortho::hermite(10, 1.3), -66123.413033062409) < 1e-14);
  for (int n = 0; n <= 25; ++n) {
    const Complex z{0.4, -0.9};
    const auto ref = reference::hermite(n, {0.4L, -0.9L});
    CHECK(rel(ortho::hermite(n, z), {static_cast<double>(ref.real()), static_cast<double>(ref.imag())}) <
          1e-12);
  }
}

TEST_CASE("Hermite parity at imaginary arguments") {
  const auto [e0, o0] = ortho::hermite_parity_check(0, 0.8);
  CHECK(e0 == Complex{1.0, 0.0});
  CHECK(std::abs(o0 - Complex{0.0, 1.6}) < 1e-15);
  const auto [e1, o1] = ortho::hermite_parity_check(1, 1.0);
  CHECK(std::abs(e1 - Complex{-6.0, 0.0}) < 1e-14);
  CHECK(std::abs(o1 - Complex{0.0, -20.0}) < 1e-14);
  for (int m = 0; m <= 12; ++m) {
    const auto [even, odd] = ortho::hermite_parity_check(m, 0.7);
    CHECK(even.imag() == 0.0);
    CHECK(odd.real() == 0.0);
  }
}

TEST_CASE("Hermite-Laguerre bridges") {
  for (double t : {-1.1, 0.3, 0.9, 1.7}) {
    for (int n = 0; n <= 25; ++n) {
      CHECK(rel(ortho::hermite_via_laguerre(n, t), ortho::hermite(n, t)) < 1e-11);
    }
    for (int n = 0; n <= 25; ++n) {
      const Complex it{0.0, t};
      CHECK(rel(ortho::hermite_via_laguerre(n, it), ortho::hermite(n, it)) < 1e-11);
    }
  }
}

TEST_CASE("degree bound") {
  CHECK_NOTHROW(ortho::laguerre_table(ortho::kMaxDegree, 0.5, 1.0));
  CHECK_THROWS(ortho::laguerre_table(ortho::kMaxDegree + 1, 0.5, 1.0));
  CHECK_THROWS(ortho::hermite(-1, 1.0));
}
