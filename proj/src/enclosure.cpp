#include "primecert/enclosure.hpp"

#include <algorithm>

#include "primecert/errors.hpp"

namespace primecert {

Enclosure::Enclosure(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("enclosure with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

std::string Enclosure::str(int digits) const {
  return "[" + lo_.to_decimal(digits) + ", " + hi_.to_decimal(digits) + "]";
}

namespace interval {

namespace {

constexpr long kSlack = 16;

BigRational down(const BigRational& x, long bits) {
  return significant_bits(x) > bits + kSlack ? round_down(x, bits) : x;
}

BigRational up(const BigRational& x, long bits) {
  return significant_bits(x) > bits + kSlack ? round_up(x, bits) : x;
}

// |x|^k rounded in one direction; x >= 0.
BigRational pow_directed(const BigRational& x, unsigned long k, long bits, bool upward) {
  auto round = [&](const BigRational& v) { return upward ? up(v, bits) : down(v, bits); };
  BigRational result(1);
  BigRational base = x;
  while (k > 0) {
    if (k & 1UL) result = round(result * base);
    k >>= 1;
    if (k > 0) base = round(base * base);
  }
  return result;
}

}  // namespace

Enclosure round_outward(const Enclosure& x, long bits) {
  return Enclosure(down(x.lo(), bits), up(x.hi(), bits));
}

Enclosure neg(const Enclosure& x) { return Enclosure(-x.hi(), -x.lo()); }

Enclosure add(const Enclosure& a, const Enclosure& b, long bits) {
  return Enclosure(down(a.lo() + b.lo(), bits), up(a.hi() + b.hi(), bits));
}

Enclosure sub(const Enclosure& a, const Enclosure& b, long bits) {
  return Enclosure(down(a.lo() - b.hi(), bits), up(a.hi() - b.lo(), bits));
}

Enclosure mul(const Enclosure& a, const Enclosure& b, long bits) {
  if (a.is_point() && b.is_point()) {
    BigRational p = a.lo() * b.lo();
    return Enclosure(down(p, bits), up(p, bits));
  }
  BigRational c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return Enclosure(down(*mn, bits), up(*mx, bits));
}

Enclosure div(const Enclosure& a, const Enclosure& b, long bits) {
  if (b.contains(BigRational(0)))
    throw DomainError("division by an enclosure containing zero: " + b.str());
  Enclosure inv(BigRational(1) / b.hi(), BigRational(1) / b.lo());
  if (b.is_point()) {
    BigRational q = BigRational(1) / b.lo();
    inv = Enclosure(q);
  }
  if (a.is_point() && b.is_point()) {
    BigRational q = a.lo() / b.lo();
    return Enclosure(down(q, bits), up(q, bits));
  }
  return mul(a, inv, bits);
}

Enclosure pow(const Enclosure& x, long k, long bits) {
  if (k == 0) return Enclosure(BigRational(1));
  if (k < 0) return div(Enclosure(BigRational(1)), pow(x, -k, bits), bits);
  auto uk = static_cast<unsigned long>(k);
  const bool odd = (uk & 1UL) != 0;
  if (x.lo().sign() >= 0)
    return Enclosure(pow_directed(x.lo(), uk, bits, false), pow_directed(x.hi(), uk, bits, true));
  if (x.hi().sign() <= 0) {
    BigRational a = -x.hi(), b = -x.lo();  // 0 <= a <= b
    if (odd) return Enclosure(-pow_directed(b, uk, bits, true), -pow_directed(a, uk, bits, false));
    return Enclosure(pow_directed(a, uk, bits, false), pow_directed(b, uk, bits, true));
  }
  // straddles zero
  BigRational a = -x.lo(), b = x.hi();
  if (odd) return Enclosure(-pow_directed(a, uk, bits, true), pow_directed(b, uk, bits, true));
  return Enclosure(BigRational(0), pow_directed(std::max(a, b), uk, bits, true));
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

}  // namespace interval
}  // namespace primecert
