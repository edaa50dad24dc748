#pragma once

// Laguerre (through the terminating 1F1 and through the three-term
// recurrence) and physicists' Hermite polynomials on complex arguments.

#include <utility>
#include <vector>

#include "hyperverify/numkernel.hpp"

namespace hyperverify::ortho {

/// Largest degree the tables are sized for.
inline constexpr int kMaxDegree = 400;

/// L_n^{(alpha)}(x).
struct LaguerreSpec {
  int n = 0;
  Complex alpha;
  Complex x;
};

/// ((alpha+1, n)/n!) * 1F1(-n; alpha+1; x), summed as a terminating series.
/// Throws DegenerateParameter when alpha+1 = -j with j < n.
Complex laguerre(const LaguerreSpec& spec);

/// L_0 .. L_nmax by (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
std::vector<Complex> laguerre_table(int nmax, Complex alpha, Complex x);

/// H_n(z) by H_{k+1} = 2z H_k - 2k H_{k-1}, H_0 = 1, H_1 = 2z.
Complex hermite(int n, Complex z);

/// H_0(z) .. H_nmax(z) from the same recurrence.
std::vector<Complex> hermite_table(int nmax, Complex z);

/// (H_{2m}(i t), H_{2m+1}(i t)); the first is real and the second imaginary.
std::pair<Complex, Complex> hermite_parity_check(int m, double t);

/// H_n(t) rebuilt from Laguerre polynomials:
///   H_{2m}(t)   = (-1)^m 2^{2m}   m!   L_m^{(-1/2)}(t^2)
///   H_{2m+1}(t) = (-1)^m 2^{2m+1} m! t L_m^{(1/2)}(t^2)
/// Used only to cross-check the recurrence.
Complex hermite_via_laguerre(int n, Complex t);

}  // namespace hyperverify::ortho
