#include "hyperverify/closed_form.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hyperverify/errors.hpp"

namespace hyperverify::catalog {

double Point::get(Var v) const noexcept {
  switch (v) {
    case Var::x: return x;
    case Var::y: return y;
    case Var::p: return p;
    case Var::pp: return pp;
    case Var::s: return s;
    case Var::t: return t;
  }
  return 0.0;
}

namespace {

ClosedForm make(Op op, std::vector<ClosedForm> args, std::vector<int> groups = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  n->groups = std::move(groups);
  return ClosedForm(std::shared_ptr<const Node>(std::move(n)));
}

std::vector<Complex> eval_all(const std::vector<ClosedForm>& args, std::size_t from,
                              std::size_t count, const Point& at, const TruncationPolicy& policy) {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t k = from; k < from + count; ++k) out.push_back(args[k].evaluate(at, policy));
  return out;
}

double require_real(Complex v, const char* what) {
  if (v.imag() != 0.0) throw std::invalid_argument(std::string(what) + ": expects a real argument");
  return v.real();
}

class GeneralRelationSource {
 public:
  GeneralRelationSource(const Node& node, const Point& at, const TruncationPolicy& policy)
      : node_(node), policy_(policy), xy_(-at.x * at.y), st_(-at.s * at.t), arg_(at.x + at.s) {
    for (const Complex& a : node.upper) upper_.push_back(num::pochhammer_table(a, 0));
    for (const Complex& b : node.lower) lower_.push_back(num::pochhammer_table(b, 0));
    p_ = num::pochhammer_table(node.laguerre_p, 0);
    pp_ = num::pochhammer_table(node.laguerre_pp, 0);
  }

  void reserve(int n) {
    for (auto& t : upper_) t.extend_to(n);
    for (auto& t : lower_) t.extend_to(n);
    p_.extend_to(n);
    pp_.extend_to(n);
    for (int k = static_cast<int>(joint_.size()); k <= n; ++k) {
      Complex top{1.0, 0.0};
      for (const auto& t : upper_) top *= t[static_cast<std::size_t>(k)];
      Complex bottom{1.0, 0.0};
      for (const auto& t : lower_) bottom *= t[static_cast<std::size_t>(k)];
      if (bottom == Complex{0.0, 0.0}) {
        throw DegenerateParameter("general relation: (g) hits a nonpositive integer");
      }
      joint_.push_back(top / bottom);

      hyper::ParameterList shifted_up;
      for (const Complex& a : node_.upper) shifted_up.push_back(a + static_cast<double>(k));
      hyper::ParameterList shifted_low;
      for (const Complex& b : node_.lower) shifted_low.push_back(b + static_cast<double>(k));
      inner_.push_back(hyper::pfq_value(shifted_up, shifted_low, arg_, policy_));

      const auto ku = static_cast<std::size_t>(k);
      if (p_[ku] == Complex{0.0, 0.0} || pp_[ku] == Complex{0.0, 0.0}) {
        throw DegenerateParameter("general relation: p or p' is a nonpositive integer");
      }
      Complex mp = k == 0 ? Complex{1.0, 0.0} : m_pow_.back() * xy_ / static_cast<double>(k);
      Complex np = k == 0 ? Complex{1.0, 0.0} : n_pow_.back() * st_ / static_cast<double>(k);
      m_pow_.push_back(mp);
      n_pow_.push_back(np);
      m_part_.push_back(mp / p_[ku]);
      n_part_.push_back(np / pp_[ku]);
    }
  }

  ShellSum shell(int n) const { return sum_shell_terms(*this, n); }

  Complex term(int m, int n) const {
    const auto k = static_cast<std::size_t>(m + n);
    return joint_[k] * inner_[k] * m_part_[static_cast<std::size_t>(m)] *
           n_part_[static_cast<std::size_t>(n)];
  }

 private:
  const Node& node_;
  TruncationPolicy policy_;
  double xy_, st_, arg_;
  std::vector<num::PochhammerTable> upper_, lower_;
  num::PochhammerTable p_, pp_;
  std::vector<Complex> joint_, inner_, m_pow_, n_pow_, m_part_, n_part_;
};

}  // namespace

ClosedForm::ClosedForm(double c) : ClosedForm(Complex{c, 0.0}) {}

ClosedForm::ClosedForm(Complex c) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = c;
  node_ = std::move(n);
}

Complex ClosedForm::evaluate(const Point& at, const TruncationPolicy& policy) const {
  const Node& n = *node_;
  auto arg = [&](std::size_t k) { return n.args[k].evaluate(at, policy); };
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::parameter: return {at.get(n.var), 0.0};
    case Op::imaginary_unit: return {0.0, 1.0};
    case Op::sum: {
      num::ComplexAccumulator acc;
      for (std::size_t k = 0; k < n.args.size(); ++k) acc.add(arg(k));
      return acc.value();
    }
    case Op::difference: return arg(0) - arg(1);
    case Op::product: {
      Complex prod{1.0, 0.0};
      for (std::size_t k = 0; k < n.args.size(); ++k) prod *= arg(k);
      return prod;
    }
    case Op::quotient: return arg(0) / arg(1);
    case Op::power: {
      const Complex base = arg(0);
      const Complex e = arg(1);
      if (base.imag() == 0.0 && e.imag() == 0.0 && base.real() >= 0.0) {
        return {std::pow(base.real(), e.real()), 0.0};
      }
      return std::pow(base, e);
    }
    case Op::exp: return std::exp(arg(0));
    case Op::sin: return std::sin(arg(0));
    case Op::cos: return std::cos(arg(0));
    case Op::sqrt: {
      const Complex a = arg(0);
      if (a.imag() == 0.0 && a.real() >= 0.0) return {std::sqrt(a.real()), 0.0};
      return std::sqrt(a);
    }
    case Op::gamma: return num::gamma(arg(0));
    case Op::bessel_j: return hyper::bessel_j(arg(0), arg(1));
    case Op::bessel_i: return hyper::bessel_i(arg(0), arg(1));
    case Op::pfq: {
      const auto nn = static_cast<std::size_t>(n.groups[0]);
      const auto nd = static_cast<std::size_t>(n.groups[1]);
      return hyper::pfq(eval_all(n.args, 0, nn, at, policy), eval_all(n.args, nn, nd, at, policy),
                        arg(nn + nd), policy)
          .value;
    }
    case Op::kdf: {
      std::size_t from = 0;
      std::vector<hyper::ParameterList> lists;
      for (int count : n.groups) {
        lists.push_back(eval_all(n.args, from, static_cast<std::size_t>(count), at, policy));
        from += static_cast<std::size_t>(count);
      }
      const hyper::KdFSpec spec{lists[0], lists[1], lists[2], lists[3], lists[4], lists[5]};
      return hyper::kdf(spec, arg(from), arg(from + 1), policy).value;
    }
    case Op::gauss2f1_quadratic:
      return hyper::gauss2f1_quadratic(require_real(arg(0), "gauss2f1_quadratic"),
                                       require_real(arg(1), "gauss2f1_quadratic"),
                                       require_real(arg(2), "gauss2f1_quadratic"));
    case Op::general_relation_series: {
      GeneralRelationSource source(n, at, policy);
      return require_converged(sum_shells(source, policy), "general relation right side").value;
    }
  }
  throw std::logic_error("ClosedForm: unknown node");
}

namespace {

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::p: return "p";
    case Var::pp: return "p'";
    case Var::s: return "s";
    case Var::t: return "t";
  }
  return "?";
}

std::string render_number(Complex c) {
  std::ostringstream os;
  os.precision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

bool is_atomic(const Node& n) {
  return n.op == Op::constant || n.op == Op::parameter || n.op == Op::imaginary_unit ||
         (n.op != Op::sum && n.op != Op::difference && n.op != Op::product &&
          n.op != Op::quotient && n.op != Op::power);
}

std::string wrap(const ClosedForm& f) {
  const std::string s = f.render();
  if (is_atomic(f.node()) && !(f.node().op == Op::constant && f.node().value.real() < 0.0)) {
    return s;
  }
  return "(" + s + ")";
}

std::string join(const std::vector<ClosedForm>& args, std::size_t from, std::size_t count) {
  std::string out;
  for (std::size_t k = from; k < from + count; ++k) {
    if (k != from) out += ", ";
    out += args[k].render();
  }
  return out;
}

std::string join_list(const hyper::ParameterList& list) {
  std::string out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k != 0) out += ", ";
    out += render_number(list[k]);
  }
  return out;
}

}  // namespace

std::string ClosedForm::render() const {
  const Node& n = *node_;
  auto call = [&](const char* name) { return std::string(name) + "(" + join(n.args, 0, n.args.size()) + ")"; };
  switch (n.op) {
    case Op::constant: return render_number(n.value);
    case Op::parameter: return var_name(n.var);
    case Op::imaginary_unit: return "i";
    case Op::sum: {
      std::string out;
      for (std::size_t k = 0; k < n.args.size(); ++k) {
        if (k != 0) out += " + ";
        out += n.args[k].render();
      }
      return out;
    }
    case Op::difference: return n.args[0].render() + " - " + wrap(n.args[1]);
    case Op::product: {
      std::string out;
      for (std::size_t k = 0; k < n.args.size(); ++k) {
        if (k != 0) out += "*";
        out += wrap(n.args[k]);
      }
      return out;
    }
    case Op::quotient: return wrap(n.args[0]) + "/" + wrap(n.args[1]);
    case Op::power: return wrap(n.args[0]) + "^" + wrap(n.args[1]);
    case Op::exp: return call("exp");
    case Op::sin: return call("sin");
    case Op::cos: return call("cos");
    case Op::sqrt: return call("sqrt");
    case Op::gamma: return call("Gamma");
    case Op::bessel_j: return call("J");
    case Op::bessel_i: return call("I");
    case Op::pfq: {
      const auto nn = static_cast<std::size_t>(n.groups[0]);
      const auto nd = static_cast<std::size_t>(n.groups[1]);
      return std::to_string(nn) + "F" + std::to_string(nd) + "[" + join(n.args, 0, nn) + "; " +
             join(n.args, nn, nd) + "; " + n.args[nn + nd].render() + "]";
    }
    case Op::kdf: {
      std::string out = "KdF[";
      std::size_t from = 0;
      for (std::size_t g = 0; g < n.groups.size(); ++g) {
        if (g != 0) out += g % 2 == 0 ? " | " : " / ";
        out += join(n.args, from, static_cast<std::size_t>(n.groups[g]));
        from += static_cast<std::size_t>(n.groups[g]);
      }
      return out + "; " + n.args[from].render() + ", " + n.args[from + 1].render() + "]";
    }
    case Op::gauss2f1_quadratic: return call("Quad2F1");
    case Op::general_relation_series:
      return "GenRel[(" + join_list(n.upper) + "); (" + join_list(n.lower) +
             "); p=" + render_number(n.laguerre_p) + ", p'=" + render_number(n.laguerre_pp) +
             "]";
  }
  return "?";
}

namespace cf {

ClosedForm param(Var v) {
  auto n = std::make_shared<Node>();
  n->op = Op::parameter;
  n->var = v;
  return ClosedForm(std::shared_ptr<const Node>(std::move(n)));
}

ClosedForm i() { return make(Op::imaginary_unit, {}); }
ClosedForm pow(ClosedForm base, ClosedForm exponent) {
  return make(Op::power, {std::move(base), std::move(exponent)});
}
ClosedForm exp(ClosedForm a) { return make(Op::exp, {std::move(a)}); }
ClosedForm sin(ClosedForm a) { return make(Op::sin, {std::move(a)}); }
ClosedForm cos(ClosedForm a) { return make(Op::cos, {std::move(a)}); }
ClosedForm sqrt(ClosedForm a) { return make(Op::sqrt, {std::move(a)}); }
ClosedForm gamma(ClosedForm a) { return make(Op::gamma, {std::move(a)}); }
ClosedForm bessel_j(ClosedForm nu, ClosedForm z) {
  return make(Op::bessel_j, {std::move(nu), std::move(z)});
}
ClosedForm bessel_i(ClosedForm nu, ClosedForm z) {
  return make(Op::bessel_i, {std::move(nu), std::move(z)});
}

ClosedForm pfq(std::vector<ClosedForm> num, std::vector<ClosedForm> den, ClosedForm z) {
  std::vector<int> groups{static_cast<int>(num.size()), static_cast<int>(den.size())};
  std::vector<ClosedForm> args = std::move(num);
  args.insert(args.end(), den.begin(), den.end());
  args.push_back(std::move(z));
  return make(Op::pfq, std::move(args), std::move(groups));
}

ClosedForm kdf(std::vector<ClosedForm> h, std::vector<ClosedForm> g, std::vector<ClosedForm> a,
               std::vector<ClosedForm> c, std::vector<ClosedForm> b, std::vector<ClosedForm> d,
               ClosedForm x, ClosedForm y) {
  std::vector<int> groups;
  std::vector<ClosedForm> args;
  for (auto* list : {&h, &g, &a, &c, &b, &d}) {
    groups.push_back(static_cast<int>(list->size()));
    args.insert(args.end(), list->begin(), list->end());
  }
  args.push_back(std::move(x));
  args.push_back(std::move(y));
  return make(Op::kdf, std::move(args), std::move(groups));
}

ClosedForm gauss2f1_quadratic(ClosedForm p, ClosedForm pp, ClosedForm z) {
  return make(Op::gauss2f1_quadratic, {std::move(p), std::move(pp), std::move(z)});
}

ClosedForm general_relation_series(hyper::ParameterList d, hyper::ParameterList g, double p,
                                   double pp) {
  auto n = std::make_shared<Node>();
  n->op = Op::general_relation_series;
  n->upper = std::move(d);
  n->lower = std::move(g);
  n->laguerre_p = p;
  n->laguerre_pp = pp;
  return ClosedForm(std::shared_ptr<const Node>(std::move(n)));
}

}  // namespace cf

ClosedForm operator+(ClosedForm a, ClosedForm b) { return make(Op::sum, {std::move(a), std::move(b)}); }
ClosedForm operator-(ClosedForm a, ClosedForm b) {
  return make(Op::difference, {std::move(a), std::move(b)});
}
ClosedForm operator-(ClosedForm a) { return make(Op::product, {ClosedForm(-1.0), std::move(a)}); }
ClosedForm operator*(ClosedForm a, ClosedForm b) {
  return make(Op::product, {std::move(a), std::move(b)});
}
ClosedForm operator/(ClosedForm a, ClosedForm b) {
  return make(Op::quotient, {std::move(a), std::move(b)});
}

}  // namespace hyperverify::catalog
