#pragma once

// Adaptive summation of catalog left sides, verdicts, grid sweeps and the
// exact finite checks behind the rearrangement proof and the single-sum
// identity.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperverify/catalog.hpp"
#include "hyperverify/series.hpp"

namespace hyperverify::verify {

using catalog::IdentityDescriptor;
using catalog::Point;

enum class Verdict { pass, fail, inconclusive, skipped };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

struct Tolerances {
  double pass_tol = 1e-8;
  double fail_tol = 1e-5;
};

struct VerificationRecord {
  std::string identity_id;
  std::string variant;
  Point params;
  bool has_st = false;  // s and t are meaningful (general relation)
  Complex lhs_value;
  Complex rhs_value;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  int shell_used = 0;
  double tail_estimate = 0.0;
  double rounding_estimate = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

/// |a - b| / (1 + max(|a|, |b|)).
double relative_residual(Complex a, Complex b);

/// PASS iff converged and rel <= pass_tol; FAIL iff converged and
/// rel >= fail_tol; INCONCLUSIVE otherwise.
Verdict classify(bool converged, double rel_residual, const Tolerances& tol);

/// Left side of `desc` at `at`, summed by shells. Throws TailTooLarge when
/// the policy is exhausted; DegenerateParameter on a vanishing denominator.
SeriesResult eval_double_series(const IdentityDescriptor& desc, const Point& at,
                                const TruncationPolicy& policy = {});

/// Points outside the descriptor's domain come back SKIPPED; evaluation
/// errors come back INCONCLUSIVE with the error text in `note`.
VerificationRecord verify_point(const IdentityDescriptor& desc, const Point& at,
                                const TruncationPolicy& policy = {}, const Tolerances& tol = {});

/// Cartesian grid over p, p', x, y.
struct Grid {
  std::vector<double> p, pp, x, y;

  /// p, p' in {0.6, 1.0, 1.7, 2.5}; x in {0.05, 0.1, 0.2}; y in {0.3, 0.7, 1.2}.
  static Grid defaults();
  bool empty() const noexcept { return p.empty() || pp.empty() || x.empty() || y.empty(); }
};

/// Grid points for `desc` in lexicographic (p, p', x, y) order. Axes the
/// descriptor does not read collapse to their first value.
std::vector<Point> grid_points(const IdentityDescriptor& desc, const Grid& grid);

/// One record per grid point, in grid_points() order. `threads` = 0 picks
/// the hardware concurrency; the output does not depend on it.
std::vector<VerificationRecord> sweep(const IdentityDescriptor& desc, const Grid& grid,
                                      const TruncationPolicy& policy = {},
                                      const Tolerances& tol = {}, unsigned threads = 1);

/// |sum_{m<=u, n<=v} (-u,m)(-v,n)(-y)^m(-t)^n / ((p,m)(p',n) m! n!)
///   - 1F1(-u; p; -y) 1F1(-v; p'; -t)|
double check_rearrangement(int u, int v, double p, double pp, double y, double t);

/// (m-n)! (-m, n) == (-1)^n m! in exact integer arithmetic, 0 <= n <= m <= 12.
bool check_factorial_transform(int m, int n);

struct FiniteIdentitySpec {
  int q = 0;
  double p = 1.0;
  double pp = 1.0;
  double y = 0.0;
};

/// Both sides of the terminating single-sum identity (degree q - m reading).
struct FiniteSides {
  Complex lhs;
  Complex rhs;
};

FiniteSides finite_62_sides(const FiniteIdentitySpec& spec);

/// |lhs - rhs| of finite_62_sides().
double check_finite_62(const FiniteIdentitySpec& spec);

/// Laguerre-pair generating relation at (x, s, y, t): left side by shells
/// against the right side by shells with the inner pFq at x + s.
VerificationRecord check_general_relation(const hyper::ParameterList& d,
                                          const hyper::ParameterList& g, double p, double pp,
                                          double x, double s, double y, double t,
                                          const TruncationPolicy& policy = {},
                                          const Tolerances& tol = {});

/// One randomized general-relation configuration.
struct GeneralRelationCase {
  hyper::ParameterList d, g;
  double p = 1.0, pp = 1.0;
  double x = 0.0, s = 0.0, y = 0.0, t = 0.0;
};

/// Draws #g in {0, 1, 2} and #d in {0, ..., min(2, #g + 1)} with entries in
/// [0.6, 2.4]; p, p' in [0.6, 2.4]; y, t in [0.2, 1.5]; |x| + |s| <= 0.25.
/// With `collapse`, s = -x.
GeneralRelationCase random_general_relation_case(std::uint64_t seed, bool collapse);

VerificationRecord check_general_relation(const GeneralRelationCase& c,
                                          const TruncationPolicy& policy = {},
                                          const Tolerances& tol = {});

}  // namespace hyperverify::verify
