#include "primecert/expr.hpp"

#include <vector>

#include "primecert/errors.hpp"
#include "primecert/transcendental.hpp"

namespace primecert {

struct Expr::Node {
  Kind kind;
  BigRational value;  // constant value, or the exponent of a pow node
  std::vector<Expr> children;
};

namespace {

// Integer powers of an exact rational are computed exactly up to this size.
constexpr long kExactPowerBits = 1'000'000;
// Working bits carried above the requested precision at every node.
constexpr long kGuardBits = 32;

}  // namespace

Expr::Expr(const BigRational& value)
    : node_(std::make_shared<const Node>(Node{Kind::constant, value, {}})) {}

Expr Expr::pi() { return Expr(std::make_shared<const Node>(Node{Kind::pi, BigRational(0), {}})); }

Expr Expr::make(Kind k, const Expr* l, const Expr* r) {
  std::vector<Expr> children;
  if (l) children.push_back(*l);
  if (r) children.push_back(*r);
  return Expr(std::make_shared<const Node>(Node{k, BigRational(0), std::move(children)}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const BigRational& Expr::value() const { return node_->value; }
const BigRational& Expr::exponent() const { return node_->value; }

const Expr& Expr::left() const { return node_->children.at(0); }
const Expr& Expr::right() const { return node_->children.at(1); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::add, &a, &b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::sub, &a, &b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::mul, &a, &b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::div, &a, &b); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Kind::neg, &a, nullptr); }
Expr log(const Expr& a) { return Expr::make(Expr::Kind::log, &a, nullptr); }
Expr exp(const Expr& a) { return Expr::make(Expr::Kind::exp, &a, nullptr); }
Expr sqrt(const Expr& a) { return Expr::make(Expr::Kind::sqrt, &a, nullptr); }

Expr pow(const Expr& base, const BigRational& exponent) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Kind::pow, exponent, {base}}));
}

Expr pow(const Expr& base, const Expr& exponent) { return exp(exponent * log(base)); }

std::string Expr::str() const {
  switch (kind()) {
    case Kind::constant:
      return value().sign() < 0 || !value().is_integer() ? "(" + value().str() + ")" : value().str();
    case Kind::pi:
      return "pi";
    case Kind::add:
      return "(" + left().str() + " + " + right().str() + ")";
    case Kind::sub:
      return "(" + left().str() + " - " + right().str() + ")";
    case Kind::mul:
      return "(" + left().str() + "*" + right().str() + ")";
    case Kind::div:
      return "(" + left().str() + "/" + right().str() + ")";
    case Kind::neg:
      return "-" + left().str();
    case Kind::log:
      return "log(" + left().str() + ")";
    case Kind::exp:
      return "exp(" + left().str() + ")";
    case Kind::sqrt:
      return "sqrt(" + left().str() + ")";
    case Kind::pow:
      return left().str() + "^(" + exponent().str() + ")";
  }
  return "?";
}

namespace {

Enclosure eval_node(const Expr& e, long precision, long bits);

Enclosure eval_raw(const Expr& e, long precision, long bits) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::constant:
      return Enclosure(e.value());
    case K::pi:
      return pi_enclosure(bits);
    case K::add:
      return interval::add(eval_node(e.left(), precision, bits), eval_node(e.right(), precision, bits), bits);
    case K::sub:
      return interval::sub(eval_node(e.left(), precision, bits), eval_node(e.right(), precision, bits), bits);
    case K::mul:
      return interval::mul(eval_node(e.left(), precision, bits), eval_node(e.right(), precision, bits), bits);
    case K::div: {
      Enclosure d = eval_node(e.right(), precision, bits);
      if (d.contains(BigRational(0)))
        throw DomainError("divisor not certified nonzero: " + e.right().str() + " in " + d.str());
      return interval::div(eval_node(e.left(), precision, bits), d, bits);
    }
    case K::neg:
      return interval::neg(eval_node(e.left(), precision, bits));
    case K::log: {
      Enclosure a = eval_node(e.left(), precision, bits);
      if (!a.positive())
        throw DomainError("log argument not certified positive: " + e.left().str() + " in " + a.str());
      return log_enclosure(a, bits);
    }
    case K::exp:
      return exp_enclosure(eval_node(e.left(), precision, bits), bits);
    case K::sqrt: {
      Enclosure a = eval_node(e.left(), precision, bits);
      if (a.lo().sign() < 0)
        throw DomainError("sqrt argument not certified nonnegative: " + e.left().str() + " in " + a.str());
      return sqrt_enclosure(a, bits);
    }
    case K::pow: {
      const BigRational& k = e.exponent();
      Enclosure base = eval_node(e.left(), precision, bits);
      if (k.is_integer() && k.numerator().fits_slong_p()) {
        long ki = k.numerator().get_si();
        if (ki < 0 && base.contains(BigRational(0)))
          throw DomainError("negative power of a base not certified nonzero: " + e.left().str());
        long ak = ki < 0 ? -ki : ki;
        if (base.is_point() && ak <= kExactPowerBits &&
            ak * std::max(1L, significant_bits(base.lo())) <= kExactPowerBits)
          return interval::round_outward(Enclosure(primecert::pow(base.lo(), ki)), bits);
        return interval::pow(base, ki, bits);
      }
      if (!base.positive())
        throw DomainError("base of a non-integer power not certified positive: " + e.left().str() +
                          " in " + base.str());
      Enclosure l = log_enclosure(base, bits);
      return exp_enclosure(interval::mul(Enclosure(k), l, bits), bits);
    }
  }
  throw DomainError("unknown expression node");
}

// Non-point results are rounded outward onto the `bits` grid without slack,
// so the width tracks the precision instead of the size of the endpoints.
Enclosure eval_node(const Expr& e, long precision, long bits) {
  Enclosure r = eval_raw(e, precision, bits);
  if (r.is_point()) return r;
  const BigRational& lo = r.lo();
  const BigRational& hi = r.hi();
  return Enclosure(significant_bits(lo) > bits ? round_down(lo, bits) : lo,
                   significant_bits(hi) > bits ? round_up(hi, bits) : hi);
}

}  // namespace

Enclosure eval(const Expr& e, long precision) {
  return eval_node(e, precision, precision + kGuardBits);
}

}  // namespace primecert
