#include "hyperverify/catalog.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hyperverify/errors.hpp"
#include "hyperverify/orthopoly.hpp"

namespace hyperverify::catalog {

namespace {

// Parameter box for p and p'.
constexpr double kParamLo = 0.3;
constexpr double kParamHi = 3.0;
// Entire-type left sides.
constexpr double kEntireXY = 2.0;
// Left sides whose shells cancel catastrophically (terms ~ N! (2x)^N): inside
// these bounds the double-double shell sums converge within the noise budget.
constexpr double kQuadraticFourXY = 0.3;
constexpr double kQuadraticMaxX = 0.2;
constexpr double kBinomialTwoXY = 0.3;
// General relation: |x| + |s|.
constexpr double kGeneralRelationRadius = 0.25;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Affine constant(double c) { return {Complex{c, 0.0}, 0.0, 0.0}; }
Affine affine(double c, double cp, double cpp) { return {Complex{c, 0.0}, cp, cpp}; }
const Affine kP = affine(0.0, 1.0, 0.0);
const Affine kPP = affine(0.0, 0.0, 1.0);

using Check = std::function<std::optional<std::string>(const Point&)>;

DomainPredicate all_of(std::vector<Check> checks) {
  return [checks = std::move(checks)](const Point& at) -> std::optional<std::string> {
    for (const auto& c : checks) {
      if (auto why = c(at)) return why;
    }
    return std::nullopt;
  };
}

Check in_param_box(bool use_p, bool use_pp) {
  return [=](const Point& at) -> std::optional<std::string> {
    if (use_p && !(at.p >= kParamLo && at.p <= kParamHi)) return "p outside [0.3, 3]";
    if (use_pp && !(at.pp >= kParamLo && at.pp <= kParamHi)) return "p' outside [0.3, 3]";
    return std::nullopt;
  };
}

Check positive_xy() {
  return [](const Point& at) -> std::optional<std::string> {
    if (!(at.x > 0.0 && at.y > 0.0)) return "requires x > 0 and y > 0";
    return std::nullopt;
  };
}

Check positive_y() {
  return [](const Point& at) -> std::optional<std::string> {
    if (!(at.y > 0.0)) return "requires y > 0";
    return std::nullopt;
  };
}

Check abs_xy_at_most(double coeff, double limit, const char* label) {
  return [=](const Point& at) -> std::optional<std::string> {
    if (!(std::abs(coeff * at.x * at.y) <= limit)) {
      return std::string("|") + label + "| > " + fmt(limit);
    }
    return std::nullopt;
  };
}

Check abs_x_at_most(double limit) {
  return [=](const Point& at) -> std::optional<std::string> {
    if (!(std::abs(at.x) <= limit)) return "|x| > " + fmt(limit);
    return std::nullopt;
  };
}

Check not_pole(Affine a, const char* label) {
  return [=](const Point& at) -> std::optional<std::string> {
    if (num::is_nonpositive_integer(a.eval(at))) {
      return std::string(label) + " is a nonpositive integer";
    }
    return std::nullopt;
  };
}

Check schema_rules(std::shared_ptr<const TermSchema> schema) {
  return [schema = std::move(schema)](const Point& at) {
    return schema_denominator_violation(*schema, at);
  };
}

const char* arg_name(PolyArg arg) {
  switch (arg) {
    case PolyArg::y: return "y";
    case PolyArg::neg_y: return "-y";
    case PolyArg::sqrt_y: return "y^(1/2)";
    case PolyArg::i_sqrt_y: return "i y^(1/2)";
    case PolyArg::t: return "t";
    case PolyArg::neg_t: return "-t";
  }
  return "?";
}

using detail::ComplexDD;
using detail::DoubleDouble;

// Sums of exactly representable products, so affine parameters such as
// p + p' - 1 carry no rounding into the Pochhammer factors.
ComplexDD affine_dd(const Affine& a, const Point& at) {
  const DoubleDouble re = DoubleDouble(a.c.real()) + detail::two_prod(a.cp, at.p) +
                          detail::two_prod(a.cpp, at.pp);
  return {re, DoubleDouble(a.c.imag())};
}

ComplexDD poly_argument(PolyArg arg, const Point& at) {
  const DoubleDouble root = detail::sqrt(DoubleDouble(std::abs(at.y)));
  const bool negative = at.y < 0.0;
  switch (arg) {
    case PolyArg::y: return {at.y, 0.0};
    case PolyArg::neg_y: return {-at.y, 0.0};
    case PolyArg::sqrt_y: return negative ? ComplexDD{0.0, root} : ComplexDD{root, 0.0};
    case PolyArg::i_sqrt_y: return negative ? ComplexDD{-root, 0.0} : ComplexDD{0.0, root};
    case PolyArg::t: return {at.t, 0.0};
    case PolyArg::neg_t: return {-at.t, 0.0};
  }
  return {};
}

// out[k] = prod over the list of (a, k).
std::vector<ComplexDD> product_table(const std::vector<Affine>& list, const Point& at, int n) {
  std::vector<ComplexDD> out(static_cast<std::size_t>(n) + 1);
  out[0] = ComplexDD{1.0, 0.0};
  std::vector<ComplexDD> bases;
  for (const Affine& a : list) bases.push_back(affine_dd(a, at));
  for (int k = 1; k <= n; ++k) {
    ComplexDD v = out[static_cast<std::size_t>(k) - 1];
    for (const ComplexDD& a : bases) v = v * ComplexDD{a.re + DoubleDouble(k - 1.0), a.im};
    out[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

double parity_sign(long long e) { return (e % 2 == 0) ? 1.0 : -1.0; }

std::vector<ComplexDD> poly_values(const PolyFactor& f, const Point& at, int n) {
  const ComplexDD z = poly_argument(f.arg, at);
  const ComplexDD one{1.0, 0.0};
  std::vector<ComplexDD> out(static_cast<std::size_t>(n) + 1, one);
  switch (f.kind) {
    case PolyFactor::Kind::none:
      break;
    case PolyFactor::Kind::laguerre: {
      // (k+1) L_{k+1} = (2k+1+alpha-z) L_k - (k+alpha) L_{k-1}
      const ComplexDD alpha = affine_dd(f.superscript, at);
      if (n >= 1) out[1] = one + alpha - z;
      for (int k = 1; k < n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const ComplexDD a = ComplexDD{DoubleDouble(2.0 * k + 1.0), 0.0} + alpha - z;
        const ComplexDD b = ComplexDD{DoubleDouble(static_cast<double>(k)), 0.0} + alpha;
        out[ku + 1] = (a * out[ku] - b * out[ku - 1]) / ComplexDD{DoubleDouble(k + 1.0), 0.0};
      }
      break;
    }
    case PolyFactor::Kind::hermite: {
      // H_{k+1} = 2z H_k - 2k H_{k-1}
      const int top = f.degree_scale * n + f.degree_offset;
      std::vector<ComplexDD> h(static_cast<std::size_t>(top) + 1, one);
      const ComplexDD two_z = detail::ldexp(z, 1);
      if (top >= 1) h[1] = two_z;
      for (int k = 1; k < top; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        h[ku + 1] = two_z * h[ku] - h[ku - 1] * DoubleDouble(2.0 * k);
      }
      for (int k = 0; k <= n; ++k) {
        out[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(f.degree_scale * k + f.degree_offset)];
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string Affine::render() const {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  auto term = [&](double coeff, const char* sym) {
    if (coeff == 0.0) return;
    if (!first) os << (coeff < 0 ? "-" : "+");
    else if (coeff < 0) os << "-";
    const double mag = std::abs(coeff);
    if (mag != 1.0) os << mag;
    os << sym;
    first = false;
  };
  term(cp, "p");
  term(cpp, "p'");
  if (c.real() != 0.0 || first) {
    if (!first) os << (c.real() < 0 ? "-" : "+") << std::abs(c.real());
    else os << c.real();
  }
  if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

std::string PolyFactor::render(char index) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::none: return "";
    case Kind::laguerre:
      os << "L_" << index << "^(" << superscript.render() << ")(" << arg_name(arg) << ")";
      break;
    case Kind::hermite:
      os << "H_{" << degree_scale << index;
      if (degree_offset != 0) os << "+" << degree_offset;
      os << "}(" << arg_name(arg) << ")";
      break;
  }
  return os.str();
}

std::string TermSchema::render() const {
  std::ostringstream os;
  auto list = [&](const std::vector<Affine>& l, const char* idx) {
    for (const Affine& a : l) os << "(" << a.render() << ", " << idx << ")";
  };
  if (prefactor.node().op != Op::constant || prefactor.node().value != Complex{1.0, 0.0}) {
    os << prefactor.render() << " * ";
  }
  list(joint_num, "m+n");
  os << " (-1)^(" << sign_rule[0] << "+" << sign_rule[1] << "m+" << sign_rule[2] << "n)";
  if (two_power != std::array<int, 3>{0, 0, 0}) {
    os << " 2^(" << two_power[0] << "+" << two_power[1] << "m+" << two_power[2] << "n)";
  }
  if (n_variable == NVariable::x) {
    os << " x^(m+n" << (x_shift != 0 ? "+" + std::to_string(x_shift) : "") << ")";
  } else {
    os << " x^m s^n";
  }
  os << " / [";
  list(joint_den, "m+n");
  list(m_den, "m");
  list(n_den, "n");
  if (div_mn_factorial) os << "(m+n)!";
  if (div_m_factorial) os << "m!";
  if (div_n_factorial) os << "n!";
  os << "] " << m_factor.render('m') << " " << n_factor.render('n');
  return os.str();
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::as_printed: return "as-printed";
    case Variant::amended: return "amended";
    case Variant::derived_conjecture: return "derived-conjecture";
  }
  return "?";
}

std::optional<std::string> schema_denominator_violation(const TermSchema& schema, const Point& at) {
  auto scan = [&](const std::vector<Affine>& list,
                  const char* where) -> std::optional<std::string> {
    for (const Affine& a : list) {
      if (num::is_nonpositive_integer(a.eval(at))) {
        return std::string(where) + " parameter " + a.render() + " is a nonpositive integer";
      }
    }
    return std::nullopt;
  };
  if (auto why = scan(schema.joint_den, "joint denominator")) return why;
  if (auto why = scan(schema.m_den, "m denominator")) return why;
  if (auto why = scan(schema.n_den, "n denominator")) return why;
  for (const PolyFactor* f : {&schema.m_factor, &schema.n_factor}) {
    if (f->kind == PolyFactor::Kind::laguerre &&
        num::is_nonpositive_integer(f->superscript.eval(at) + 1.0)) {
      return "Laguerre superscript " + f->superscript.render() + " + 1 is a nonpositive integer";
    }
  }
  return std::nullopt;
}

SchemaEvaluator::SchemaEvaluator(const TermSchema& schema, const Point& at)
    : schema_(schema), at_(at), prefactor_(schema.prefactor.evaluate(at)) {}

void SchemaEvaluator::reserve(int n) {
  if (n <= capacity_) return;
  const auto joint_num = product_table(schema_.joint_num, at_, n);
  const auto joint_den = product_table(schema_.joint_den, at_, n);
  const auto m_den = product_table(schema_.m_den, at_, n);
  const auto n_den = product_table(schema_.n_den, at_, n);
  const auto m_poly = poly_values(schema_.m_factor, at_, n);
  const auto n_poly = poly_values(schema_.n_factor, at_, n);

  const DoubleDouble x(at_.x);
  const DoubleDouble v = schema_.n_variable == NVariable::x ? x : DoubleDouble(at_.s);
  const bool joint_power = schema_.n_variable == NVariable::x;

  // joint_[k] = prefactor (-1)^s0 2^c0 x^shift [x^k] [1/k!] prod(num, k) / prod(den, k)
  joint_.assign(static_cast<std::size_t>(n) + 1, Value{});
  Value base{DoubleDouble(prefactor_.real() * parity_sign(schema_.sign_rule[0])),
             DoubleDouble(prefactor_.imag() * parity_sign(schema_.sign_rule[0]))};
  base = detail::ldexp(base, schema_.two_power[0]);
  for (int k = 0; k < schema_.x_shift; ++k) base = base * x;
  DoubleDouble power(1.0);
  DoubleDouble inv_factorial(1.0);
  for (int k = 0; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k > 0) {
      if (joint_power) power = power * x;
      if (schema_.div_mn_factorial) inv_factorial = inv_factorial / DoubleDouble(k);
    }
    if (joint_num[ku].is_zero() || base.is_zero() || detail::is_zero(power)) continue;
    if (joint_den[ku].is_zero()) {
      throw DegenerateParameter("term schema: joint denominator vanishes at shell " +
                                std::to_string(k));
    }
    joint_[ku] = base * joint_num[ku] / joint_den[ku] * (power * inv_factorial);
  }

  m_parts_.assign(static_cast<std::size_t>(n) + 1, Value{});
  n_parts_.assign(static_cast<std::size_t>(n) + 1, Value{});
  for (int side = 0; side < 2; ++side) {
    const bool is_m = side == 0;
    const auto& den = is_m ? m_den : n_den;
    const auto& poly = is_m ? m_poly : n_poly;
    const int sign_coeff = schema_.sign_rule[is_m ? 1 : 2];
    const int two_coeff = schema_.two_power[is_m ? 1 : 2];
    const bool div_fact = is_m ? schema_.div_m_factorial : schema_.div_n_factorial;
    const bool own_power = !joint_power;
    const DoubleDouble var = is_m ? x : v;
    auto& parts = is_m ? m_parts_ : n_parts_;

    DoubleDouble power_k(1.0);
    DoubleDouble inv_fact_k(1.0);
    for (int k = 0; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      if (k > 0) {
        if (own_power) power_k = power_k * var;
        if (div_fact) inv_fact_k = inv_fact_k / DoubleDouble(k);
      }
      if (poly[ku].is_zero() || detail::is_zero(power_k)) continue;
      if (den[ku].is_zero()) {
        throw DegenerateParameter(std::string("term schema: ") + (is_m ? "m" : "n") +
                                  " denominator vanishes at index " + std::to_string(k));
      }
      const DoubleDouble scale = detail::ldexp(
          power_k * inv_fact_k * DoubleDouble(parity_sign(static_cast<long long>(sign_coeff) * k)),
          two_coeff * k);
      parts[ku] = poly[ku] / den[ku] * scale;
    }
  }
  capacity_ = n;
}

SchemaEvaluator::Value SchemaEvaluator::term_dd(int m, int n) const {
  const Value& a = m_parts_[static_cast<std::size_t>(m)];
  const Value& b = n_parts_[static_cast<std::size_t>(n)];
  const Value& j = joint_[static_cast<std::size_t>(m + n)];
  if (a.is_zero() || b.is_zero() || j.is_zero()) return Value{};
  return j * a * b;
}

Complex SchemaEvaluator::term(int m, int n) const { return term_dd(m, n).to_complex(); }

ShellSum SchemaEvaluator::shell(int shell) const {
  // Double-double unit roundoff is 2^-104; a term costs a few dozen operations.
  constexpr double kTermRounding = 0x1p-98;
  Value sum;
  double magnitude = 0.0;
  for (int m = shell; m >= 0; --m) {
    const Value t = term_dd(m, shell - m);
    sum = sum + t;
    magnitude += t.magnitude();
  }
  const Complex value = sum.to_complex();
  const double rounding =
      kTermRounding * magnitude + 0.5 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {value, magnitude, rounding};
}

Complex lhs_term(const IdentityDescriptor& desc, int m, int n, const Point& at) {
  if (m < 0 || n < 0) throw std::invalid_argument("lhs_term: negative index");
  const Point where = desc.canonicalize(at);
  SchemaEvaluator eval(*desc.lhs, where);
  eval.reserve(m + n);
  return eval.term(m, n);
}

Complex rhs_value(const IdentityDescriptor& desc, const Point& at, const TruncationPolicy& policy) {
  return desc.rhs.evaluate(desc.canonicalize(at), policy);
}

Point default_point() { return Point{0.1, 0.5, 1.3, 0.8, 0.0, 0.0}; }

namespace {

using namespace cf;  // NOLINT: catalog formulas read better unqualified

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> out;
  const ClosedForm X = x(), Y = y(), P = p(), PP = pp();

  auto add = [&](std::string id, Variant variant, std::shared_ptr<const TermSchema> lhs,
                 ClosedForm rhs, std::vector<Check> checks, std::string notes, bool use_p,
                 bool use_pp) {
    checks.insert(checks.begin(), in_param_box(use_p, use_pp));
    checks.push_back(schema_rules(lhs));
    IdentityDescriptor d;
    d.id = std::move(id);
    d.variant = variant;
    d.lhs = std::move(lhs);
    d.rhs = std::move(rhs);
    d.domain = all_of(std::move(checks));
    d.notes = std::move(notes);
    d.uses_p = use_p;
    d.uses_pp = use_pp;
    out.push_back(std::move(d));
    return &out.back();
  };

  // Shared shape of the section-3 left sides: (p,m)(p',n) denominators,
  // (-1)^n, x^(m+n).
  auto laguerre_pair = [](PolyArg m_arg, PolyArg n_arg) {
    TermSchema s;
    s.m_den = {kP};
    s.n_den = {kPP};
    s.sign_rule = {0, 0, 1};
    s.m_factor = PolyFactor::laguerre(affine(-1.0, 1.0, 0.0), m_arg);
    s.n_factor = PolyFactor::laguerre(affine(-1.0, 0.0, 1.0), n_arg);
    return s;
  };

  {
    TermSchema s = laguerre_pair(PolyArg::y, PolyArg::neg_y);
    s.joint_num = {constant(1.2)};
    s.joint_den = {constant(1.9)};
    add("E3.3", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        pfq({1.2, (P + PP - 1.0) / 2.0, (P + PP) / 2.0}, {1.9, P, PP, P + PP - 1.0},
            -4.0 * X * Y),
        {abs_xy_at_most(1.0, kEntireXY, "xy"), not_pole(affine(-1.0, 1.0, 1.0), "p+p'-1")},
        "(d) = (1.2), (g) = (1.9) instance of the (D+2)F(G+3) reduction", true, true);
  }
  {
    TermSchema s = laguerre_pair(PolyArg::y, PolyArg::neg_y);
    s.joint_num = {kPP, affine(-1.0, 1.0, 1.0)};
    s.joint_den = {affine(-0.5, 0.5, 0.5), affine(0.0, 0.5, 0.5)};
    add("E3.8", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        gamma(P) * pow(2.0 * sqrt(X * Y), 1.0 - P) * bessel_j(P - 1.0, 4.0 * sqrt(X * Y)),
        {positive_xy(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "Bessel J closed form", true, true);
  }
  {
    const ClosedForm half_sum = (P + PP) / 2.0;
    const ClosedForm rhs = gamma(half_sum) * exp(2.0 * X * Y) * pow(X * Y, 1.0 - half_sum) *
                           bessel_i(half_sum - 1.0, 2.0 * X * Y);
    TermSchema printed = laguerre_pair(PolyArg::neg_y, PolyArg::y);
    printed.joint_num = {kP, kPP};
    printed.joint_den = {affine(0.0, 1.0, 1.0)};
    TermSchema halved = printed;
    halved.joint_den = {affine(0.0, 0.5, 0.5)};
    add("E3.11-printed", Variant::as_printed,
        std::make_shared<const TermSchema>(std::move(printed)), rhs,
        {positive_xy(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "left denominator (p+p', m+n) as printed; expected to fail at O(x)", true, true);
    add("E3.11-halved", Variant::amended, std::make_shared<const TermSchema>(std::move(halved)),
        rhs, {positive_xy(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "left denominator read as ((p+p')/2, m+n)", true, true);
  }
  {
    TermSchema s = laguerre_pair(PolyArg::neg_y, PolyArg::y);
    s.joint_num = {kP, kPP};
    auto shared = std::make_shared<const TermSchema>(std::move(s));
    const std::vector<Check> region = {abs_xy_at_most(4.0, kQuadraticFourXY, "4xy"),
                                       abs_x_at_most(kQuadraticMaxX)};
    auto with = [&](std::vector<Check> extra) {
      std::vector<Check> c = region;
      c.insert(c.end(), extra.begin(), extra.end());
      return c;
    };
    add("E3.12", Variant::as_printed, shared,
        pfq({(P + PP - 1.0) / 2.0, (P + PP) / 2.0}, {P + PP - 1.0}, 4.0 * X * Y),
        with({not_pole(affine(-1.0, 1.0, 1.0), "p+p'-1")}), "Gauss 2F1 form", true, true);
    add("E3.12-algebraic", Variant::as_printed, shared,
        gauss2f1_quadratic(P, PP, 4.0 * X * Y), with({}),
        "same left side, algebraic closed form of the 2F1", true, true);
  }
  {
    const Affine two_minus_p = affine(2.0, -1.0, 0.0);
    TermSchema s;
    s.joint_num = {kP, two_minus_p};
    s.m_den = {kP};
    s.n_den = {two_minus_p};
    s.sign_rule = {0, 0, 1};
    s.m_factor = PolyFactor::laguerre(affine(-1.0, 1.0, 0.0), PolyArg::neg_y);
    s.n_factor = PolyFactor::laguerre(affine(1.0, -1.0, 0.0), PolyArg::y);
    auto* d = add("E3.13", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
                  pow(1.0 - 4.0 * X * Y, -0.5),
                  {abs_xy_at_most(4.0, kQuadraticFourXY, "4xy"), abs_x_at_most(kQuadraticMaxX)},
                  "p' = 2 - p specialization of E3.12", true, false);
    d->canonical = [](Point at) {
      at.pp = 2.0 - at.p;
      return at;
    };
  }
  {
    TermSchema s;
    s.joint_num = {kP};
    s.m_den = {kP};
    s.n_den = {kP};
    s.sign_rule = {0, 0, 1};
    s.m_factor = PolyFactor::laguerre(affine(-1.0, 1.0, 0.0), PolyArg::y);
    s.n_factor = PolyFactor::laguerre(affine(-1.0, 1.0, 0.0), PolyArg::y);
    TermSchema binomial = s;
    binomial.joint_num = {kP, affine(-1.0, 2.0, 0.0)};
    add("E4.3", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        pfq({}, {P}, -X * X * Y * Y), {abs_xy_at_most(1.0, kEntireXY, "xy")},
        "0F1 form; equals Gamma(p)(xy)^(1-p) J_(p-1)(2xy)", true, false);
    add("E4.5", Variant::as_printed, std::make_shared<const TermSchema>(std::move(binomial)),
        pow(1.0 + 4.0 * X * X * Y * Y, 0.5 - P),
        {abs_xy_at_most(2.0, kBinomialTwoXY, "2xy")}, "binomial closed form", true, false);
  }
  {
    TermSchema s;
    s.joint_num = {constant(0.5), constant(0.5)};
    s.m_den = {constant(0.5)};
    s.n_den = {constant(0.5)};
    s.sign_rule = {0, 3, -2};  // (-1)^(m+2m-2n), stored literally
    s.div_m_factorial = s.div_n_factorial = s.div_mn_factorial = true;
    s.m_factor = PolyFactor::hermite(0, PolyArg::i_sqrt_y);
    s.n_factor = PolyFactor::hermite(0, PolyArg::sqrt_y);
    auto shared = std::make_shared<const TermSchema>(std::move(s));
    add("E5.3-printed", Variant::as_printed, shared, exp(4.0 * X * Y),
        {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "printed right side exp(4xy); fails at O(x^2)", false, false);
    add("E5.3-derived", Variant::derived_conjecture, shared,
        0.5 + 0.5 * exp(8.0 * X * Y) * bessel_i(0.0, 8.0 * X * Y),
        {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "conjectured right side 1/2 + exp(8xy) I_0(8xy)/2", false, false);
  }
  {
    TermSchema s;
    s.joint_num = {constant(1.5), constant(2.0)};
    s.m_den = {constant(1.5)};
    s.n_den = {constant(1.5)};
    s.sign_rule = {0, 1, 0};
    s.two_power = {-2, -2, -2};
    s.div_m_factorial = s.div_n_factorial = s.div_mn_factorial = true;
    s.m_factor = PolyFactor::hermite(1, PolyArg::i_sqrt_y);
    s.n_factor = PolyFactor::hermite(1, PolyArg::sqrt_y);
    add("E5.4", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        i() * Y * exp(4.0 * X * Y), {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "purely imaginary right side", false, false);
  }
  {
    TermSchema s;
    s.joint_num = {constant(1.5)};
    s.m_den = {constant(0.5)};
    s.n_den = {constant(1.5)};
    s.sign_rule = {0, 1, 0};
    s.two_power = {-1, -2, -2};
    s.div_m_factorial = s.div_n_factorial = true;
    s.m_factor = PolyFactor::hermite(0, PolyArg::i_sqrt_y);
    s.n_factor = PolyFactor::hermite(1, PolyArg::sqrt_y);
    add("E5.5", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        sqrt(Y) * exp(4.0 * X * Y), {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")}, "",
        false, false);
  }
  {
    TermSchema s;
    s.joint_num = {kPP, affine(-0.5, 0.0, 1.0)};
    s.joint_den = {affine(-0.25, 0.0, 0.5), affine(0.25, 0.0, 0.5)};
    s.m_den = {constant(0.5)};
    s.n_den = {kPP};
    s.sign_rule = {0, 1, 1};
    s.two_power = {0, -2, 0};
    s.div_m_factorial = true;
    s.m_factor = PolyFactor::hermite(0, PolyArg::sqrt_y);
    s.n_factor = PolyFactor::laguerre(affine(-1.0, 0.0, 1.0), PolyArg::neg_y);
    add("E5.6", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        cos(4.0 * sqrt(X) * sqrt(Y)), {positive_xy(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "Hermite-Laguerre mixed pair", false, true);
  }
  {
    TermSchema s;
    s.joint_num = {constant(0.5)};
    s.m_den = {constant(0.5)};
    s.n_den = {constant(0.5)};
    s.sign_rule = {0, 1, 0};
    s.two_power = {0, -2, -2};
    s.div_m_factorial = s.div_n_factorial = true;
    s.m_factor = PolyFactor::hermite(0, PolyArg::sqrt_y);
    s.n_factor = PolyFactor::hermite(0, PolyArg::sqrt_y);
    add("E5.7", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        cos(2.0 * X * Y), {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")}, "", false, false);
  }
  {
    TermSchema s;
    s.joint_num = {constant(1.5)};
    s.m_den = {constant(1.5)};
    s.n_den = {constant(1.5)};
    s.sign_rule = {0, 1, 0};
    s.two_power = {-1, -2, -2};
    s.x_shift = 1;
    s.div_m_factorial = s.div_n_factorial = true;
    s.m_factor = PolyFactor::hermite(1, PolyArg::sqrt_y);
    s.n_factor = PolyFactor::hermite(1, PolyArg::sqrt_y);
    add("E5.8", Variant::as_printed, std::make_shared<const TermSchema>(std::move(s)),
        sin(2.0 * X * Y), {positive_y(), abs_xy_at_most(1.0, kEntireXY, "xy")},
        "x^(m+n+1) left side", false, false);
  }
  return out;
}

}  // namespace

const std::vector<IdentityDescriptor>& builtin_catalog() {
  static const std::vector<IdentityDescriptor> catalog = build_catalog();
  return catalog;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  for (const auto& d : builtin_catalog()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

IdentityDescriptor general_relation_descriptor(const hyper::ParameterList& d,
                                               const hyper::ParameterList& g, double p,
                                               double pp) {
  for (double v : {p, pp}) {
    if (num::is_nonpositive_integer(Complex{v, 0.0})) {
      throw DegenerateParameter("general relation: p and p' must avoid nonpositive integers");
    }
  }
  hyper::check_denominators(g, -1, "general relation (g)");

  TermSchema s;
  for (const Complex& a : d) s.joint_num.push_back({a, 0.0, 0.0});
  for (const Complex& b : g) s.joint_den.push_back({b, 0.0, 0.0});
  s.m_den = {constant(p)};
  s.n_den = {constant(pp)};
  s.n_variable = NVariable::s;
  s.m_factor = PolyFactor::laguerre(constant(p - 1.0), PolyArg::y);
  s.n_factor = PolyFactor::laguerre(constant(pp - 1.0), PolyArg::t);

  IdentityDescriptor desc;
  desc.id = "GR";
  desc.variant = Variant::as_printed;
  desc.lhs = std::make_shared<const TermSchema>(std::move(s));
  desc.rhs = cf::general_relation_series(d, g, p, pp);
  desc.uses_p = desc.uses_pp = false;
  const bool balanced = d.size() <= g.size() + 1;
  desc.domain = [balanced](const Point& at) -> std::optional<std::string> {
    if (!balanced) return "(d) longer than (g) + 1: left side diverges";
    if (!(std::abs(at.x) + std::abs(at.s) <= kGeneralRelationRadius)) {
      return "|x| + |s| > " + fmt(kGeneralRelationRadius);
    }
    return std::nullopt;
  };
  const double fixed_p = p;
  const double fixed_pp = pp;
  desc.canonical = [fixed_p, fixed_pp](Point at) {
    at.p = fixed_p;
    at.pp = fixed_pp;
    return at;
  };
  desc.notes = "Laguerre-pair generating relation with inner pFq at x + s";
  return desc;
}

}  // namespace hyperverify::catalog
