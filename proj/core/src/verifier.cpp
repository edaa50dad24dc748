#include "hyperverify/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "hyperverify/detail/double_double.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/orthopoly.hpp"

namespace hyperverify::verify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::inconclusive, Verdict::skipped}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

double relative_residual(Complex a, Complex b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

Verdict classify(bool converged, double rel_residual, const Tolerances& tol) {
  if (!converged || !std::isfinite(rel_residual)) return Verdict::inconclusive;
  if (rel_residual <= tol.pass_tol) return Verdict::pass;
  if (rel_residual >= tol.fail_tol) return Verdict::fail;
  return Verdict::inconclusive;
}

SeriesResult eval_double_series(const IdentityDescriptor& desc, const Point& at,
                                const TruncationPolicy& policy) {
  const Point where = desc.canonicalize(at);
  catalog::SchemaEvaluator source(*desc.lhs, where);
  return require_converged(sum_shells(source, policy), desc.id + " left side");
}

VerificationRecord verify_point(const IdentityDescriptor& desc, const Point& at,
                                const TruncationPolicy& policy, const Tolerances& tol) {
  VerificationRecord rec;
  rec.identity_id = desc.id;
  rec.variant = std::string(catalog::to_string(desc.variant));
  rec.params = desc.canonicalize(at);

  if (auto why = desc.reject(rec.params)) {
    rec.verdict = Verdict::skipped;
    rec.note = "off-domain: " + *why;
    return rec;
  }

  bool converged = false;
  try {
    const SeriesResult lhs = eval_double_series(desc, rec.params, policy);
    rec.lhs_value = lhs.value;
    rec.shell_used = lhs.diagnostics.order_used;
    rec.tail_estimate = lhs.diagnostics.tail_estimate;
    rec.rounding_estimate = lhs.diagnostics.rounding_estimate;
    converged = true;
  } catch (const TailTooLarge& e) {
    rec.lhs_value = e.partial();
    rec.shell_used = e.order();
    rec.tail_estimate = e.tail_estimate();
    rec.rounding_estimate = e.rounding_estimate();
    rec.note = e.what();
  } catch (const Error& e) {
    rec.note = std::string("left side: ") + e.what();
    rec.verdict = Verdict::inconclusive;
    return rec;
  }

  try {
    rec.rhs_value = catalog::rhs_value(desc, rec.params, policy);
  } catch (const Error& e) {
    rec.note = std::string("right side: ") + e.what();
    rec.verdict = Verdict::inconclusive;
    return rec;
  }

  rec.abs_residual = std::abs(rec.lhs_value - rec.rhs_value);
  rec.rel_residual = relative_residual(rec.lhs_value, rec.rhs_value);
  rec.verdict = classify(converged, rec.rel_residual, tol);
  return rec;
}

Grid Grid::defaults() {
  return Grid{{0.6, 1.0, 1.7, 2.5}, {0.6, 1.0, 1.7, 2.5}, {0.05, 0.1, 0.2}, {0.3, 0.7, 1.2}};
}

std::vector<Point> grid_points(const IdentityDescriptor& desc, const Grid& grid) {
  if (grid.empty()) throw std::invalid_argument("grid: every axis needs at least one value");
  const std::vector<double> ps = desc.uses_p ? grid.p : std::vector<double>{grid.p.front()};
  const std::vector<double> pps = desc.uses_pp ? grid.pp : std::vector<double>{grid.pp.front()};
  std::vector<Point> out;
  for (double p : ps) {
    for (double pp : pps) {
      for (double x : grid.x) {
        for (double y : grid.y) out.push_back(Point{x, y, p, pp, 0.0, 0.0});
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> sweep(const IdentityDescriptor& desc, const Grid& grid,
                                      const TruncationPolicy& policy, const Tolerances& tol,
                                      unsigned threads) {
  const std::vector<Point> points = grid_points(desc, grid);
  std::vector<VerificationRecord> out(points.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));

  if (threads <= 1) {
    for (std::size_t k = 0; k < points.size(); ++k) out[k] = verify_point(desc, points[k], policy, tol);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < points.size() && !failed; k = next++) {
          try {
            out[k] = verify_point(desc, points[k], policy, tol);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double check_rearrangement(int u, int v, double p, double pp, double y, double t) {
  if (u < 0 || v < 0) throw std::invalid_argument("check_rearrangement: negative degree");
  hyper::check_denominators({Complex{p, 0.0}}, u, "check_rearrangement (p)");
  hyper::check_denominators({Complex{pp, 0.0}}, v, "check_rearrangement (p')");

  // a[m] = (-u,m)(-y)^m / ((p,m) m!), b[n] likewise; the double sum is
  // accumulated in double-double so only the right side's rounding remains.
  using detail::DoubleDouble;
  auto factors = [](int top, double param, double arg) {
    std::vector<DoubleDouble> out{DoubleDouble(1.0)};
    for (int k = 0; k < top; ++k) {
      out.push_back(out.back() * (DoubleDouble(-top + k) * DoubleDouble(-arg)) /
                    ((DoubleDouble(param) + DoubleDouble(k)) * DoubleDouble(k + 1.0)));
    }
    return out;
  };
  const auto a = factors(u, p, y);
  const auto b = factors(v, pp, t);
  DoubleDouble sum(0.0);
  for (const DoubleDouble& am : a) {
    for (const DoubleDouble& bn : b) sum = sum + am * bn;
  }
  const Complex lhs{sum.to_double(), 0.0};
  const Complex rhs = hyper::pfq_value({Complex(-u)}, {Complex(p)}, Complex(-y)) *
                      hyper::pfq_value({Complex(-v)}, {Complex(pp)}, Complex(-t));
  return std::abs(lhs - rhs);
}

bool check_factorial_transform(int m, int n) {
  if (n < 0 || n > m || m > 12) {
    throw std::invalid_argument("check_factorial_transform: need 0 <= n <= m <= 12");
  }
  long long rising = 1;  // (-m, n)
  for (int k = 0; k < n; ++k) rising *= static_cast<long long>(-m + k);
  const auto lhs = static_cast<long long>(num::factorial_u64(m - n)) * rising;
  const long long sign = (n % 2 == 0) ? 1 : -1;
  const long long rhs = sign * static_cast<long long>(num::factorial_u64(m));
  return lhs == rhs;
}

FiniteSides finite_62_sides(const FiniteIdentitySpec& spec) {
  if (spec.q < 0) throw std::invalid_argument("check_finite_62: negative q");
  const Complex p{spec.p, 0.0};
  const Complex pp{spec.pp, 0.0};
  std::vector<Complex> terms;
  for (int m = 0; m <= spec.q; ++m) {
    const Complex den = num::pochhammer(p, m) * num::pochhammer(pp, spec.q - m);
    if (den == Complex{0.0, 0.0}) {
      throw DegenerateParameter("check_finite_62: (p, m)(p', q-m) vanishes");
    }
    const Complex lm = ortho::laguerre({m, p - 1.0, Complex{-spec.y, 0.0}});
    const Complex lq = ortho::laguerre({spec.q - m, pp - 1.0, Complex{spec.y, 0.0}});
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    terms.push_back(sign * lm * lq / den);
  }
  const Complex lhs = num::comp_sum(terms);

  const Complex den = num::pochhammer(p, spec.q) * num::pochhammer(pp, spec.q) *
                      num::pochhammer(p + pp - 1.0, spec.q);
  if (den == Complex{0.0, 0.0}) {
    throw DegenerateParameter("check_finite_62: right-side denominator vanishes");
  }
  Complex rhs = num::pochhammer((p + pp - 1.0) / 2.0, spec.q) *
                num::pochhammer((p + pp) / 2.0, spec.q) * std::pow(-4.0 * spec.y, spec.q) / den;
  for (int k = 2; k <= spec.q; ++k) rhs /= static_cast<double>(k);
  return {lhs, rhs};
}

double check_finite_62(const FiniteIdentitySpec& spec) {
  const FiniteSides s = finite_62_sides(spec);
  return std::abs(s.lhs - s.rhs);
}

VerificationRecord check_general_relation(const hyper::ParameterList& d,
                                          const hyper::ParameterList& g, double p, double pp,
                                          double x, double s, double y, double t,
                                          const TruncationPolicy& policy, const Tolerances& tol) {
  const IdentityDescriptor desc = catalog::general_relation_descriptor(d, g, p, pp);
  VerificationRecord rec = verify_point(desc, Point{x, y, p, pp, s, t}, policy, tol);
  rec.has_st = true;
  return rec;
}

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

double draw(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_draw(rng); }

}  // namespace

GeneralRelationCase random_general_relation_case(std::uint64_t seed, bool collapse) {
  std::mt19937_64 rng(seed);
  GeneralRelationCase c;
  const auto g_size = static_cast<int>(rng() % 3);
  const auto d_size = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(2, g_size + 1) + 1));
  for (int k = 0; k < d_size; ++k) c.d.emplace_back(draw(rng, 0.6, 2.4), 0.0);
  for (int k = 0; k < g_size; ++k) c.g.emplace_back(draw(rng, 0.6, 2.4), 0.0);
  c.p = draw(rng, 0.6, 2.4);
  c.pp = draw(rng, 0.6, 2.4);
  c.y = draw(rng, 0.2, 1.5);
  c.t = draw(rng, 0.2, 1.5);
  c.x = draw(rng, -0.125, 0.125);
  c.s = collapse ? -c.x : draw(rng, -0.125, 0.125);
  return c;
}

VerificationRecord check_general_relation(const GeneralRelationCase& c,
                                          const TruncationPolicy& policy, const Tolerances& tol) {
  return check_general_relation(c.d, c.g, c.p, c.pp, c.x, c.s, c.y, c.t, policy, tol);
}

}  // namespace hyperverify::verify
