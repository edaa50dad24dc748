#include "hyperverify/hyper.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "hyperverify/detail/double_double.hpp"
#include "hyperverify/errors.hpp"

namespace hyperverify {

TruncationPolicy TruncationPolicy::from_environment() {
  TruncationPolicy policy;
  if (const char* env = std::getenv("HYPERVERIFY_MAX_SHELL"); env != nullptr && *env != '\0') {
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
      throw std::invalid_argument(std::string("HYPERVERIFY_MAX_SHELL: not a positive integer: ") +
                                  env);
    }
    policy.max_shell = value;
    policy.initial_shell = std::min(policy.initial_shell, value);
  }
  return policy;
}

void TruncationPolicy::validate() const {
  if (initial_shell < 1 || initial_shell > max_shell) {
    throw std::invalid_argument("TruncationPolicy: need 1 <= initial_shell <= max_shell");
  }
  if (!(tail_tol > 0.0) || !(noise_tol > 0.0)) {
    throw std::invalid_argument("TruncationPolicy: tolerances must be positive");
  }
  if (min_shell < 0) throw std::invalid_argument("TruncationPolicy: negative min_shell");
}

SeriesResult require_converged(const SeriesResult& r, const std::string& what) {
  if (!r.diagnostics.converged) {
    const auto& d = r.diagnostics;
    char detail[96];
    std::snprintf(detail, sizeof detail, " (tail %.3g, rounding bound %.3g)", d.tail_estimate,
                  d.rounding_estimate);
    throw TailTooLarge(what + ": not converged by shell " + std::to_string(d.order_used) + detail,
                       r.value, d.order_used, d.tail_estimate, d.rounding_estimate);
  }
  return r;
}

namespace hyper {

namespace {

using detail::ComplexDD;

bool is_exact_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Multiplies `term` by prod(num + n) / prod(den + n) * z / (n + 1).
ComplexDD next_term(const ComplexDD& term, const ParameterList& num, const ParameterList& den,
                    const ComplexDD& z, int n) {
  ComplexDD numer = z;
  for (const Complex& a : num) numer = numer * detail::shifted(a, n);
  ComplexDD denom{detail::DoubleDouble(static_cast<double>(n + 1)), detail::DoubleDouble(0.0)};
  for (const Complex& b : den) denom = denom * detail::shifted(b, n);
  return term * numer / denom;
}

class DDAccumulator {
 public:
  void add(const ComplexDD& t) {
    re_.add(t.re.hi);
    re_.add(t.re.lo);
    im_.add(t.im.hi);
    im_.add(t.im.lo);
    if (!std::isfinite(re_.raw_sum()) || !std::isfinite(im_.raw_sum())) {
      throw OverflowError("pfq: partial sum left binary64 range");
    }
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  num::NeumaierSum re_;
  num::NeumaierSum im_;
};

}  // namespace

int terminating_index(const ParameterList& num) {
  int k = -1;
  for (const Complex& a : num) {
    if (is_exact_nonpositive_integer(a)) {
      const int idx = static_cast<int>(-a.real());
      if (k < 0 || idx < k) k = idx;
    }
  }
  return k;
}

void check_denominators(const ParameterList& den, int last_index, const char* where) {
  for (const Complex& b : den) {
    if (!num::is_nonpositive_integer(b)) continue;
    const int j = static_cast<int>(-std::round(b.real()));
    if (last_index < 0 || j < last_index) {
      throw DegenerateParameter(std::string(where) + ": denominator parameter " +
                                std::to_string(b.real()) + " is a nonpositive integer");
    }
  }
}

SeriesResult pfq(const ParameterList& num, const ParameterList& den, Complex z,
                 const TruncationPolicy& policy) {
  policy.validate();
  const int last = terminating_index(num);
  check_denominators(den, last, "pfq");
  if (!num::is_finite(z)) throw std::invalid_argument("pfq: non-finite argument");

  SeriesDiagnostics diag;
  if (z == Complex{0.0, 0.0} || last == 0) {
    diag.converged = true;
    return {Complex{1.0, 0.0}, diag};
  }
  if (last < 0 && num.size() > den.size() + 1) {
    throw ConvergenceViolation("pfq: p > q + 1 with a non-terminating series at z != 0");
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const ComplexDD zdd(z);
  ComplexDD term(Complex{1.0, 0.0});
  DDAccumulator acc;
  double magnitude = 0.0;

  if (last > 0) {
    for (int n = 0; n <= last; ++n) {
      acc.add(term);
      magnitude += std::abs(term.to_complex());
      if (n < last) term = next_term(term, num, den, zdd, n);
    }
    diag.order_used = last;
    diag.converged = true;
    diag.rounding_estimate = 2.0 * eps * std::abs(acc.value()) + 64.0 * eps * eps * magnitude;
    return {acc.value(), diag};
  }

  int small_run = 0;
  for (int n = 0; n <= policy.max_shell; ++n) {
    acc.add(term);
    const double mag = std::abs(term.to_complex());
    magnitude += mag;
    diag.order_used = n;
    const double scale = std::max(1.0, std::abs(acc.value()));
    small_run = mag <= policy.tail_tol * scale ? small_run + 1 : 0;
    diag.tail_estimate = mag;
    if (small_run >= 3 && n >= policy.min_shell) {
      diag.converged = true;
      break;
    }
    term = next_term(term, num, den, zdd, n);
  }
  diag.rounding_estimate = 2.0 * eps * std::abs(acc.value()) + 64.0 * eps * eps * magnitude;
  return require_converged({acc.value(), diag}, "pfq");
}

Complex pfq_value(const ParameterList& num, const ParameterList& den, Complex z,
                  const TruncationPolicy& policy) {
  return pfq(num, den, z, policy).value;
}

std::vector<Complex> pfq_terms(const ParameterList& num, const ParameterList& den, Complex z,
                               int count) {
  std::vector<Complex> out;
  if (count <= 0) return out;
  const int last = terminating_index(num);
  const ComplexDD zdd(z);
  ComplexDD term(Complex{1.0, 0.0});
  for (int n = 0; n < count; ++n) {
    if (last >= 0 && n > last) {
      out.emplace_back(0.0, 0.0);
      continue;
    }
    out.push_back(term.to_complex());
    term = next_term(term, num, den, zdd, n);
  }
  return out;
}

namespace {

Complex list_ratio(const std::vector<num::PochhammerTable>& numer,
                   const std::vector<num::PochhammerTable>& denom, int k) {
  Complex top{1.0, 0.0};
  for (const auto& t : numer) top *= t[static_cast<std::size_t>(k)];
  if (top == Complex{0.0, 0.0}) return top;
  Complex bottom{1.0, 0.0};
  for (const auto& t : denom) bottom *= t[static_cast<std::size_t>(k)];
  return top / bottom;
}

std::vector<num::PochhammerTable> make_tables(const ParameterList& list) {
  std::vector<num::PochhammerTable> out;
  out.reserve(list.size());
  for (const Complex& a : list) out.push_back(num::pochhammer_table(a, 0));
  return out;
}

class KdFSource {
 public:
  KdFSource(const KdFSpec& spec, Complex x, Complex y)
      : x_(x),
        y_(y),
        h_(make_tables(spec.H)),
        g_(make_tables(spec.G)),
        a_(make_tables(spec.A)),
        c_(make_tables(spec.C)),
        b_(make_tables(spec.B)),
        d_(make_tables(spec.D)) {}

  void reserve(int n) {
    for (auto* group : {&h_, &g_, &a_, &c_, &b_, &d_}) {
      for (auto& t : *group) t.extend_to(n);
    }
    const int have = static_cast<int>(joint_.size());
    for (int k = have; k <= n; ++k) {
      joint_.push_back(list_ratio(h_, g_, k));
      Complex mx = k == 0 ? Complex{1.0, 0.0} : x_pow_[k - 1] * x_ / static_cast<double>(k);
      Complex ny = k == 0 ? Complex{1.0, 0.0} : y_pow_[k - 1] * y_ / static_cast<double>(k);
      x_pow_.push_back(mx);
      y_pow_.push_back(ny);
      m_part_.push_back(mx == Complex{0.0, 0.0} ? mx : list_ratio(a_, c_, k) * mx);
      n_part_.push_back(ny == Complex{0.0, 0.0} ? ny : list_ratio(b_, d_, k) * ny);
    }
  }

  ShellSum shell(int n) const { return sum_shell_terms(*this, n); }

  Complex term(int m, int n) const {
    const Complex mp = m_part_[static_cast<std::size_t>(m)];
    const Complex np = n_part_[static_cast<std::size_t>(n)];
    if (mp == Complex{0.0, 0.0} || np == Complex{0.0, 0.0}) return {0.0, 0.0};
    return joint_[static_cast<std::size_t>(m + n)] * mp * np;
  }

 private:
  Complex x_, y_;
  std::vector<num::PochhammerTable> h_, g_, a_, c_, b_, d_;
  std::vector<Complex> joint_, x_pow_, y_pow_, m_part_, n_part_;
};

int combine_bound(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

}  // namespace

SeriesResult kdf(const KdFSpec& spec, Complex x, Complex y, const TruncationPolicy& policy) {
  policy.validate();
  const int kh = terminating_index(spec.H);
  const int ka = terminating_index(spec.A);
  const int kb = terminating_index(spec.B);
  const int m_bound = combine_bound(kh, ka);
  const int n_bound = combine_bound(kh, kb);
  const int joint_bound = kh >= 0 ? kh : (ka >= 0 && kb >= 0 ? ka + kb : -1);
  check_denominators(spec.G, joint_bound, "kdf (G)");
  check_denominators(spec.C, m_bound, "kdf (C)");
  check_denominators(spec.D, n_bound, "kdf (D)");

  const bool m_open = m_bound < 0 && x != Complex{0.0, 0.0};
  const bool n_open = n_bound < 0 && y != Complex{0.0, 0.0};
  if ((m_open && spec.H.size() + spec.A.size() > spec.G.size() + spec.C.size() + 1) ||
      (n_open && spec.H.size() + spec.B.size() > spec.G.size() + spec.D.size() + 1)) {
    throw ConvergenceViolation("kdf: numerator lists outgrow denominators along an open axis");
  }

  KdFSource source(spec, x, y);
  return require_converged(sum_shells(source, policy), "kdf");
}

Complex bessel_j(Complex nu, Complex z) {
  const Complex g = num::gamma(nu + 1.0);
  if (z == Complex{0.0, 0.0}) {
    if (nu == Complex{0.0, 0.0}) return {1.0, 0.0};
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw OverflowError("bessel_j: singular at z = 0 for Re(nu) <= 0");
  }
  const Complex pre = std::pow(z / 2.0, nu) / g;
  return pre * pfq_value({}, {nu + 1.0}, -z * z / 4.0);
}

Complex bessel_i(Complex nu, Complex z) {
  const Complex g = num::gamma(nu + 1.0);
  if (z == Complex{0.0, 0.0}) {
    if (nu == Complex{0.0, 0.0}) return {1.0, 0.0};
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw OverflowError("bessel_i: singular at z = 0 for Re(nu) <= 0");
  }
  const Complex pre = std::pow(z / 2.0, nu) / g;
  return pre * pfq_value({}, {nu + 1.0}, z * z / 4.0);
}

Complex gauss2f1_quadratic(double p, double pp, double z) {
  if (!(z < 1.0)) {
    throw BranchError("gauss2f1_quadratic: z = " + std::to_string(z) + " outside z < 1");
  }
  const double w = std::sqrt(1.0 - z);
  return {std::pow((1.0 + w) / 2.0, 2.0 - p - pp) / w, 0.0};
}

}  // namespace hyper
}  // namespace hyperverify
