#pragma once

#include <string>

#include "primecert/rational.hpp"

namespace primecert {

/// Closed interval [lo, hi] with exact rational endpoints that is guaranteed
/// to contain some real value.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(BigRational point) : lo_(point), hi_(std::move(point)) {}
  Enclosure(BigRational lo, BigRational hi);

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  BigRational mid() const { return ldexp(lo_ + hi_, -1); }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }

  /// "[lo, hi]" rendered in decimal.
  std::string str(int digits = 12) const;

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  BigRational lo_;
  BigRational hi_;
};

// Interval arithmetic. Every result is rounded outward to `bits` significant
// bits whenever an endpoint would otherwise grow past that size.
namespace interval {

Enclosure round_outward(const Enclosure& x, long bits);

Enclosure neg(const Enclosure& x);
Enclosure add(const Enclosure& a, const Enclosure& b, long bits);
Enclosure sub(const Enclosure& a, const Enclosure& b, long bits);
Enclosure mul(const Enclosure& a, const Enclosure& b, long bits);
// Throws DomainError when the divisor's enclosure contains zero.
Enclosure div(const Enclosure& a, const Enclosure& b, long bits);
// Integer power with directed rounding at each squaring.
Enclosure pow(const Enclosure& x, long k, long bits);

Enclosure hull(const Enclosure& a, const Enclosure& b);

}  // namespace interval
}  // namespace primecert
