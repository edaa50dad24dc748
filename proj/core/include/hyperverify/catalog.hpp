#pragma once

// The generating relations as data: a term schema per left-hand double
// series, a closed form per right-hand side, and a domain predicate.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperverify/closed_form.hpp"
#include "hyperverify/detail/double_double.hpp"
#include "hyperverify/hyper.hpp"

namespace hyperverify::catalog {

/// c + cp * p + cpp * p'. Every Pochhammer entry in the catalog has this form.
struct Affine {
  Complex c{};
  double cp = 0.0;
  double cpp = 0.0;

  Complex eval(const Point& at) const noexcept { return c + cp * at.p + cpp * at.pp; }
  std::string render() const;
};

enum class PolyArg { y, neg_y, sqrt_y, i_sqrt_y, t, neg_t };

/// Polynomial factor attached to one summation index k (m or n):
/// Laguerre L_k^{(superscript)}(arg) or Hermite H_{scale*k + offset}(arg).
struct PolyFactor {
  enum class Kind { none, laguerre, hermite };
  Kind kind = Kind::none;
  int degree_scale = 1;
  int degree_offset = 0;
  Affine superscript;
  PolyArg arg = PolyArg::y;

  static PolyFactor laguerre(Affine superscript, PolyArg arg) {
    return {Kind::laguerre, 1, 0, superscript, arg};
  }
  static PolyFactor hermite(int offset, PolyArg arg) { return {Kind::hermite, 2, offset, {}, arg}; }
  std::string render(char index) const;
};

/// Which variable carries the n index: x^(m+n) (catalog) or x^m s^n (general relation).
enum class NVariable { x, s };

/// Summand of a left-hand double series:
///   prefactor * (-1)^(s0 + s1 m + s2 n) * 2^(c0 + c1 m + c2 n) * x^(m + x_shift) v^n
///   * prod (joint_num, m+n) / prod (joint_den, m+n) / prod (m_den, m) / prod (n_den, n)
///   / [m!] [n!] [(m+n)!] * F_m * F_n
/// with v = x or s.
struct TermSchema {
  std::vector<Affine> joint_num, joint_den;
  std::vector<Affine> m_den, n_den;
  std::array<int, 3> sign_rule{0, 0, 0};
  std::array<int, 3> two_power{0, 0, 0};
  int x_shift = 0;
  NVariable n_variable = NVariable::x;
  bool div_m_factorial = false;
  bool div_n_factorial = false;
  bool div_mn_factorial = false;
  PolyFactor m_factor, n_factor;
  ClosedForm prefactor = 1.0;

  std::string render() const;
};

enum class Variant { as_printed, amended, derived_conjecture };

std::string_view to_string(Variant v);

/// nullopt when the point is accepted, otherwise the rejection reason.
using DomainPredicate = std::function<std::optional<std::string>(const Point&)>;

struct IdentityDescriptor {
  std::string id;
  Variant variant = Variant::as_printed;
  std::shared_ptr<const TermSchema> lhs;
  ClosedForm rhs = 0.0;
  DomainPredicate domain;
  std::string notes;
  bool uses_p = true;
  bool uses_pp = true;
  /// Applied to every point before evaluation (e.g. p' := 2 - p).
  std::function<Point(Point)> canonical;

  Point canonicalize(Point at) const { return canonical ? canonical(at) : at; }
  std::optional<std::string> reject(const Point& at) const { return domain ? domain(at) : std::nullopt; }
};

/// The corrected identities plus the amended/derived variants, in a fixed order.
const std::vector<IdentityDescriptor>& builtin_catalog();

/// nullptr when `id` is not in the catalog.
const IdentityDescriptor* find_identity(std::string_view id);

/// (x, y, p, p') = (0.1, 0.5, 1.3, 0.8).
Point default_point();

/// Precomputed Pochhammer, polynomial and power tables for one schema at one
/// point; term(m, n) is the exact (m, n) summand. Usable as a sum_shells source.
class SchemaEvaluator {
 public:
  SchemaEvaluator(const TermSchema& schema, const Point& at);

  void reserve(int n);
  Complex term(int m, int n) const;
  /// Shell m + n = `shell`, summed in double-double.
  ShellSum shell(int shell) const;
  int capacity() const noexcept { return capacity_; }

 private:
  using Value = detail::ComplexDD;

  Value term_dd(int m, int n) const;

  const TermSchema& schema_;
  Point at_;
  Complex prefactor_;
  std::vector<Value> joint_, m_parts_, n_parts_;
  int capacity_ = -1;
};

/// Summand (m, n) of the descriptor's left side at `at`.
Complex lhs_term(const IdentityDescriptor& desc, int m, int n, const Point& at);

/// Closed-form right side at `at`.
Complex rhs_value(const IdentityDescriptor& desc, const Point& at,
                  const TruncationPolicy& policy = {});

/// Laguerre-pair generating relation for given (d), (g), p, p'. The point's
/// x, s, y, t drive the evaluation; its p and p' are ignored.
IdentityDescriptor general_relation_descriptor(const hyper::ParameterList& d,
                                               const hyper::ParameterList& g, double p, double pp);

/// Checks shared by the domain predicates; exposed for tests.
std::optional<std::string> schema_denominator_violation(const TermSchema& schema, const Point& at);

}  // namespace hyperverify::catalog
