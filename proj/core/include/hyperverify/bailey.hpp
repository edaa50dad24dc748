#pragma once

// Two-dimensional Bailey transform over finitely supported sequences.
//
//   beta(m,n)  = sum_{p<=m, q<=n} alpha(p,q) mu(m-p, n-q) nu(m+p, n+q)
//   gamma(m,n) = sum_{p>=m, q>=n} delta(p,q) mu(p-m, q-n) nu(p+m, q+n)
//   sum alpha*gamma == sum beta*delta

#include <cstdint>
#include <functional>

#include "hyperverify/numkernel.hpp"

namespace hyperverify::bailey {

/// A doubly indexed sequence. Must be pure: same (p, q), same value.
using Sequence = std::function<Complex(int, int)>;

struct BaileyScheme {
  Sequence alpha, delta, mu, nu;
  /// alpha and delta vanish whenever p > support or q > support.
  int support = 0;
};

/// Samples the ring p = support+1 or q = support+1 (0 <= other index <= support+1)
/// and reports whether alpha and delta vanish there.
bool support_holds(const BaileyScheme& scheme);

Complex bailey_beta(const BaileyScheme& scheme, int m, int n);

Complex bailey_gamma(const BaileyScheme& scheme, int m, int n);

/// Both sides of the transform, each truncated at the support bound.
struct BaileySides {
  Complex alpha_gamma;  // sum alpha(m,n) gamma(m,n)
  Complex beta_delta;   // sum beta(m,n) delta(m,n)
};

BaileySides bailey_sides(const BaileyScheme& scheme);

/// |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
double bailey_identity_residual(const BaileyScheme& scheme);

/// Kronecker delta at (0, 0); handy as a trivial kernel.
Complex kronecker_origin(int p, int q);

/// All four sequences equal to 1 on the support box (mu and nu everywhere).
BaileyScheme all_ones_scheme(int support);

/// Scheme with rational entries k/d, |k| <= 9, 1 <= d <= 8, drawn from a
/// mt19937_64 seeded with `seed`. Support is drawn from [0, max_support].
BaileyScheme random_scheme(std::uint64_t seed, int max_support);

}  // namespace hyperverify::bailey
