#pragma once

// Expression trees for the right-hand sides of the catalog identities.

#include <memory>
#include <string>
#include <vector>

#include "hyperverify/hyper.hpp"
#include "hyperverify/numkernel.hpp"
#include "hyperverify/series.hpp"

namespace hyperverify::catalog {

enum class Var { x, y, p, pp, s, t };

/// Evaluation point. Catalog identities read (x, y, p, pp); the general
/// relation also reads s and t.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double pp = 0.0;
  double s = 0.0;
  double t = 0.0;

  double get(Var v) const noexcept;
};

enum class Op {
  constant,
  parameter,
  imaginary_unit,
  sum,
  difference,
  product,
  quotient,
  power,
  exp,
  sin,
  cos,
  sqrt,
  gamma,
  bessel_j,
  bessel_i,
  pfq,
  kdf,
  gauss2f1_quadratic,
  general_relation_series,
};

struct Node;

/// Immutable handle to an expression node; cheap to copy and share.
class ClosedForm {
 public:
  ClosedForm(double c);  // NOLINT: constants read naturally in catalog code
  ClosedForm(Complex c);  // NOLINT
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }

  Complex evaluate(const Point& at, const TruncationPolicy& policy = {}) const;
  std::string render() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op = Op::constant;
  Complex value{};
  Var var = Var::x;
  std::vector<ClosedForm> args;
  /// pfq: {num count, den count}; kdf: {H, G, A, C, B, D} counts.
  std::vector<int> groups;
  /// general_relation_series: (d), (g) and the Laguerre parameters p, p'.
  hyper::ParameterList upper, lower;
  double laguerre_p = 0.0;
  double laguerre_pp = 0.0;
};

namespace cf {

ClosedForm param(Var v);
inline ClosedForm x() { return param(Var::x); }
inline ClosedForm y() { return param(Var::y); }
inline ClosedForm p() { return param(Var::p); }
inline ClosedForm pp() { return param(Var::pp); }
inline ClosedForm s() { return param(Var::s); }
inline ClosedForm t() { return param(Var::t); }
ClosedForm i();

ClosedForm pow(ClosedForm base, ClosedForm exponent);
ClosedForm exp(ClosedForm a);
ClosedForm sin(ClosedForm a);
ClosedForm cos(ClosedForm a);
ClosedForm sqrt(ClosedForm a);
ClosedForm gamma(ClosedForm a);
ClosedForm bessel_j(ClosedForm nu, ClosedForm z);
ClosedForm bessel_i(ClosedForm nu, ClosedForm z);
ClosedForm pfq(std::vector<ClosedForm> num, std::vector<ClosedForm> den, ClosedForm z);
ClosedForm kdf(std::vector<ClosedForm> h, std::vector<ClosedForm> g, std::vector<ClosedForm> a,
               std::vector<ClosedForm> c, std::vector<ClosedForm> b, std::vector<ClosedForm> d,
               ClosedForm x, ClosedForm y);
ClosedForm gauss2f1_quadratic(ClosedForm p, ClosedForm pp, ClosedForm z);

/// Right side of the Laguerre-pair generating relation:
///   sum ((d),m+n) (-xy)^m (-st)^n / (((g),m+n) (p,m) (pp,n) m! n!)
///       * pFq[(d)+m+n; (g)+m+n; x+s]
ClosedForm general_relation_series(hyper::ParameterList d, hyper::ParameterList g, double p,
                                   double pp);

}  // namespace cf

ClosedForm operator+(ClosedForm a, ClosedForm b);
ClosedForm operator-(ClosedForm a, ClosedForm b);
ClosedForm operator-(ClosedForm a);
ClosedForm operator*(ClosedForm a, ClosedForm b);
ClosedForm operator/(ClosedForm a, ClosedForm b);

}  // namespace hyperverify::catalog
