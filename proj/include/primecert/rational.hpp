#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace primecert {

using BigInt = mpz_class;

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class that keeps the canonical-form
/// invariant at every public entry point and adds the parsing/rendering the
/// reports need ("num/den" exact strings and decimal literals like "0.999986").
class BigRational {
 public:
  BigRational() = default;
  BigRational(int v) : q_(v) {}
  BigRational(long v) : q_(v) {}
  BigRational(long long v) : q_(static_cast<long>(v)) {}
  BigRational(unsigned long v) : q_(v) {}
  BigRational(unsigned long long v) : q_(static_cast<unsigned long>(v)) {}
  BigRational(const BigInt& v) : q_(v) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q);

  /// Accepts "a", "-a", "a/b" and decimal literals "12.5", "-0.000014".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  // {x} = x - [x], always in [0, 1).
  BigRational frac() const;
  BigRational abs() const;

  /// floor(log2 |x|) for x != 0.
  long ilog2() const;

  double to_double() const { return q_.get_d(); }

  /// Exact rendering: "num" for integers, "num/den" otherwise.
  std::string str() const;
  /// Approximate decimal rendering with `digits` significant digits.
  std::string to_decimal(int digits = 12) const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Exact integer power; negative exponents invert (base must be nonzero).
BigRational pow(const BigRational& base, long exponent);

/// x * 2^k, exact.
BigRational ldexp(const BigRational& x, long k);

// Directed rounding to a dyadic rational with `bits` significant bits.
BigRational round_down(const BigRational& x, long bits);
BigRational round_up(const BigRational& x, long bits);

/// Number of bits needed to write x down exactly (numerator + denominator),
/// ignoring power-of-two factors of a dyadic denominator's numerator.
long significant_bits(const BigRational& x);

BigInt isqrt(const BigInt& x);
bool is_perfect_square(const BigInt& x);
std::size_t bit_length(const BigInt& x);

}  // namespace primecert
