#include "primecert/transcendental.hpp"

#include <algorithm>

#include "primecert/errors.hpp"

namespace primecert {

namespace {

// Fixed-point value `value * 2^-scale` known to within `err` ulps.
struct Fixed {
  BigInt value;
  BigInt err;
  long scale;
};

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Enclosure to_enclosure(const Fixed& f) {
  return Enclosure(ldexp(BigRational(BigInt(f.value - f.err)), -f.scale),
                   ldexp(BigRational(BigInt(f.value + f.err)), -f.scale));
}

long bits_of(long v) {
  long b = 0;
  for (unsigned long u = static_cast<unsigned long>(v < 0 ? -v : v); u; u >>= 1) ++b;
  return b;
}

// sum_{j>=0} (+-1)^j z^(2j+1)/(2j+1) for z = zn/zd with |z| <= 1/3.
//
// Each truncated multiply or divide adds less than one ulp; a power that has
// been truncated j times is off by at most j+1 ulps, and dividing it by 2j+1
// keeps each term within 2 ulps. Once the running power drops to <= 1 ulp the
// tail is bounded by |z|^(2j+1) / (1 - z^2) <= 9/8 (|pw| + e_pw) ulps.
Fixed odd_power_series(const BigInt& zn, const BigInt& zd, long scale, bool alternating) {
  BigInt pw = tdiv(BigInt(zn << static_cast<mp_bitcnt_t>(scale)), zd);
  BigInt sum = pw;
  BigInt err = 1;
  const BigInt z2n = zn * zn;
  const BigInt z2d = zd * zd;
  for (long j = 1;; ++j) {
    pw = tdiv(BigInt(pw * z2n), z2d);
    const BigInt e_pw = j + 1;
    if (abs(pw) <= 1) {
      err += 2 * (abs(pw) + e_pw);
      break;
    }
    BigInt term = tdiv(pw, BigInt(2 * j + 1));
    if (alternating && (j & 1))
      sum -= term;
    else
      sum += term;
    err += 2;
  }
  return {sum, err, scale};
}

// log 2 = 2 atanh(1/3), fixed point at `scale`.
Fixed log2_fixed(long scale) {
  Fixed f = odd_power_series(BigInt(1), BigInt(3), scale, false);
  return {2 * f.value, 2 * f.err, scale};
}

// log m for m in roughly [3/4, 3/2], m given exactly.
Fixed log_reduced_fixed(const BigRational& m, long scale) {
  BigRational z = (m - BigRational(1)) / (m + BigRational(1));
  Fixed f = odd_power_series(z.numerator(), z.denominator(), scale, false);
  return {2 * f.value, 2 * f.err, scale};
}

// Taylor series of e^y for |y| < 1/2 (here always < 1/32). The computed
// term is within 2 ulps of the true one; the tail after the first term that
// drops to <= 1 ulp is at most twice that term.
Fixed exp_reduced_fixed(const BigRational& y, long scale) {
  const BigInt yn = y.numerator();
  const BigInt yd = y.denominator();
  BigInt t = BigInt(1) << static_cast<mp_bitcnt_t>(scale);
  BigInt sum = t;
  BigInt err = 0;
  for (long j = 1;; ++j) {
    t = tdiv(BigInt(t * yn), BigInt(yd * j));
    if (abs(t) <= 1) {
      err += 2 * (abs(t) + 2);
      break;
    }
    sum += t;
    err += 2;
  }
  return {sum, err, scale};
}

Enclosure log_point(const BigRational& q, long precision) {
  if (q.sign() <= 0) throw DomainError("log of non-positive number " + q.to_decimal());
  if (q == BigRational(1)) return Enclosure(BigRational(0));

  long k = q.ilog2();
  BigRational m = ldexp(q, -k);  // [1, 2)
  if (m >= BigRational(3, 2)) {
    ++k;
    m = ldexp(m, -1);
  }
  const long scale = precision + 24 + bits_of(k) + bits_of(precision);

  Enclosure lm;
  if (significant_bits(m) > scale + 16) {
    BigRational mlo = round_down(m, scale + 8);
    BigRational mhi = round_up(m, scale + 8);
    lm = Enclosure(to_enclosure(log_reduced_fixed(mlo, scale)).lo(),
                   to_enclosure(log_reduced_fixed(mhi, scale)).hi());
  } else {
    lm = to_enclosure(log_reduced_fixed(m, scale));
  }
  if (k == 0) return interval::round_outward(lm, precision + 16);

  Enclosure l2 = to_enclosure(log2_fixed(scale));
  Enclosure kl2 = interval::mul(Enclosure(BigRational(k)), l2, scale + 8);
  return interval::round_outward(interval::add(kl2, lm, scale + 8), precision + 16);
}

Enclosure exp_point(const BigRational& q, long precision) {
  if (q.is_zero()) return Enclosure(BigRational(1));
  // |q| / 2^s < 1/32
  const long s = std::max(0L, q.ilog2() + 1 + 5);
  const long scale = precision + s + 24 + bits_of(precision);

  BigRational y = ldexp(q, -s);
  Enclosure ey;
  if (significant_bits(y) > scale + 16) {
    BigRational ylo = round_down(y, scale + 8);
    BigRational yhi = round_up(y, scale + 8);
    ey = Enclosure(to_enclosure(exp_reduced_fixed(ylo, scale)).lo(),
                   to_enclosure(exp_reduced_fixed(yhi, scale)).hi());
  } else {
    ey = to_enclosure(exp_reduced_fixed(y, scale));
  }
  for (long i = 0; i < s; ++i) ey = interval::mul(ey, ey, scale);
  return interval::round_outward(ey, precision + 16);
}

Enclosure sqrt_point(const BigRational& q, long precision) {
  if (q.sign() < 0) throw DomainError("sqrt of negative number " + q.to_decimal());
  if (q.is_zero()) return Enclosure(BigRational(0));
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  if (is_perfect_square(num) && is_perfect_square(den))
    return Enclosure(BigRational(isqrt(num), isqrt(den)));

  const long r = q.ilog2() >= 0 ? q.ilog2() / 2 : -((-q.ilog2() + 1) / 2);
  const long k = precision + 24 - r;
  // floor/ceil of q * 4^k
  BigInt n = num, d = den;
  if (k >= 0)
    n <<= static_cast<mp_bitcnt_t>(2 * k);
  else
    d <<= static_cast<mp_bitcnt_t>(-2 * k);
  BigInt xf, xc;
  mpz_fdiv_q(xf.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  mpz_cdiv_q(xc.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  BigInt lo = isqrt(xf);
  BigInt hi = isqrt(xc);
  if (hi * hi != xc) hi += 1;
  return Enclosure(ldexp(BigRational(lo), -k), ldexp(BigRational(hi), -k));
}

}  // namespace

Enclosure log_enclosure(const BigRational& q, long precision) {
  return log_point(q, std::max(precision, 8L));
}

Enclosure exp_enclosure(const BigRational& q, long precision) {
  return exp_point(q, std::max(precision, 8L));
}

Enclosure sqrt_enclosure(const BigRational& q, long precision) {
  return sqrt_point(q, std::max(precision, 8L));
}

Enclosure pi_enclosure(long precision) {
  const long scale = std::max(precision, 8L) + 24 + bits_of(precision);
  Fixed a = odd_power_series(BigInt(1), BigInt(5), scale, true);
  Fixed b = odd_power_series(BigInt(1), BigInt(239), scale, true);
  Fixed pi{16 * a.value - 4 * b.value, 16 * a.err + 4 * b.err, scale};
  return interval::round_outward(to_enclosure(pi), precision + 16);
}

Enclosure log_enclosure(const Enclosure& x, long precision) {
  if (x.lo().sign() <= 0)
    throw DomainError("log of an enclosure not certified positive: " + x.str());
  if (x.is_point()) return log_enclosure(x.lo(), precision);
  return Enclosure(log_enclosure(x.lo(), precision).lo(), log_enclosure(x.hi(), precision).hi());
}

Enclosure exp_enclosure(const Enclosure& x, long precision) {
  if (x.is_point()) return exp_enclosure(x.lo(), precision);
  return Enclosure(exp_enclosure(x.lo(), precision).lo(), exp_enclosure(x.hi(), precision).hi());
}

Enclosure sqrt_enclosure(const Enclosure& x, long precision) {
  if (x.lo().sign() < 0)
    throw DomainError("sqrt of an enclosure not certified nonnegative: " + x.str());
  if (x.is_point()) return sqrt_enclosure(x.lo(), precision);
  return Enclosure(sqrt_enclosure(x.lo(), precision).lo(), sqrt_enclosure(x.hi(), precision).hi());
}

}  // namespace primecert
