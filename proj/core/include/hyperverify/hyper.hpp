#pragma once

// Generalized hypergeometric pFq, the Kampe de Feriet double series,
// Bessel J/I through 0F1 and the algebraic quadratic-transformation 2F1.

#include <vector>

#include "hyperverify/numkernel.hpp"
#include "hyperverify/series.hpp"

namespace hyperverify::hyper {

/// Numerator or denominator parameters (alpha_1..alpha_p or beta_1..beta_q).
using ParameterList = std::vector<Complex>;

/// Lists of the double series
///   sum ((H),m+n)((A),m)((B),n) / (((G),m+n)((C),m)((D),n)) x^m y^n / (m! n!)
struct KdFSpec {
  ParameterList H, G;  // joint, index m + n
  ParameterList A, C;  // index m only
  ParameterList B, D;  // index n only
};

/// Index of the last nonzero term when some numerator entry is a nonpositive
/// integer -k (the smallest such k); -1 when the series does not terminate.
int terminating_index(const ParameterList& num);

/// Throws DegenerateParameter if a denominator entry is a nonpositive integer
/// -j with j < last_index, i.e. a zero divisor is reached at or before term
/// `last_index`. Pass last_index < 0 for a non-terminating series.
void check_denominators(const ParameterList& den, int last_index, const char* where);

/// pFq[num; den; z], term recurrence carried in double-double and
/// accumulated with Neumaier summation. Terminating series are summed exactly
/// to their last term.
SeriesResult pfq(const ParameterList& num, const ParameterList& den, Complex z,
                 const TruncationPolicy& policy = {});

/// Convenience: value only.
Complex pfq_value(const ParameterList& num, const ParameterList& den, Complex z,
                  const TruncationPolicy& policy = {});

/// The first `count` terms of the series, rounded to binary64.
std::vector<Complex> pfq_terms(const ParameterList& num, const ParameterList& den, Complex z,
                               int count);

/// Double series summed over shells of constant m + n.
SeriesResult kdf(const KdFSpec& spec, Complex x, Complex y, const TruncationPolicy& policy = {});

/// J_nu(z) = (z/2)^nu / Gamma(nu+1) * 0F1(; nu+1; -z^2/4), principal power.
Complex bessel_j(Complex nu, Complex z);

/// I_nu(z) = (z/2)^nu / Gamma(nu+1) * 0F1(; nu+1; z^2/4), principal power.
Complex bessel_i(Complex nu, Complex z);

/// (1-z)^(-1/2) * ((1 + sqrt(1-z))/2)^(2-p-pp) for real z < 1; this is
/// 2F1((p+pp-1)/2, (p+pp)/2; p+pp-1; z). Throws BranchError for z >= 1.
Complex gauss2f1_quadratic(double p, double pp, double z);

}  // namespace hyperverify::hyper
