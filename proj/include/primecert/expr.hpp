#pragma once

#include <memory>
#include <string>

#include "primecert/enclosure.hpp"

namespace primecert {

/// Immutable real-valued expression tree, evaluated to certified enclosures.
///
/// Node kinds: rational constants, the circle constant pi, + - * / and
/// negation, log, exp, sqrt, and powers with a rational exponent. Subtrees
/// are shared, so copies are cheap.
class Expr {
 public:
  enum class Kind { constant, pi, add, sub, mul, div, neg, log, exp, sqrt, pow };

  Expr(const BigRational& value);  // NOLINT: constants convert implicitly
  Expr(int value) : Expr(BigRational(value)) {}
  Expr(long value) : Expr(BigRational(value)) {}

  static Expr constant(const BigRational& value) { return Expr(value); }
  /// Decimal or "a/b" literal, e.g. Expr::literal("0.054886").
  static Expr literal(std::string_view text) { return Expr(BigRational::parse(text)); }
  static Expr pi();

  Kind kind() const;
  const BigRational& value() const;     // constant nodes
  const BigRational& exponent() const;  // pow nodes
  const Expr& left() const;
  const Expr& right() const;

  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr log(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr sqrt(const Expr& a);
  friend Expr pow(const Expr& base, const BigRational& exponent);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind k, const Expr* l, const Expr* r);

  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr log(const Expr& a);
Expr exp(const Expr& a);
Expr sqrt(const Expr& a);
Expr pow(const Expr& base, const BigRational& exponent);
/// base^exponent for a real exponent, as exp(exponent * log(base)).
Expr pow(const Expr& base, const Expr& exponent);

/// Enclosure of the exact value of `e`, rounding outward at every node.
/// Throws DomainError naming the offending subterm when a log argument is
/// not certified positive, a sqrt argument not certified nonnegative, or a
/// divisor not certified nonzero.
Enclosure eval(const Expr& e, long precision);

}  // namespace primecert
