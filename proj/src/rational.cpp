#include "primecert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "primecert/errors.hpp"

namespace primecert {

namespace {

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw UsageError("malformed number: '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw UsageError("malformed number: '" + std::string(whole) + "'");
  return BigInt(std::string(digits), 10);
}

// floor(x * 2^k) or ceil(x * 2^k)
BigInt scaled(const BigRational& x, long k, bool up) {
  BigInt num = x.numerator();
  BigInt den = x.denominator();
  if (k >= 0)
    num <<= static_cast<mp_bitcnt_t>(k);
  else
    den <<= static_cast<mp_bitcnt_t>(-k);
  BigInt q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  auto b = text.find_first_not_of(" \t");
  auto e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw UsageError("empty number");
  std::string_view t = text.substr(b, e - b + 1);

  bool negative = false;
  std::string_view body = t;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  BigRational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(body.substr(0, slash), t);
    BigInt den = parse_integer(body.substr(slash + 1), t);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(t) + "'");
    value = BigRational(num, den);
  } else {
    long exponent = 0;
    if (auto ex = body.find_first_of("eE"); ex != std::string_view::npos) {
      std::string_view es = body.substr(ex + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      BigInt ev = parse_integer(es, t);
      if (!ev.fits_slong_p() || ev > 100000) throw UsageError("exponent out of range in '" + std::string(t) + "'");
      exponent = eneg ? -ev.get_si() : ev.get_si();
      body = body.substr(0, ex);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
      frac_digits = static_cast<long>(body.size() - dot - 1);
      if (digits.empty()) throw UsageError("malformed number: '" + std::string(t) + "'");
    } else {
      digits = std::string(body);
    }
    BigInt mant = parse_integer(digits, t);
    long shift = exponent - frac_digits;
    if (shift >= 0)
      value = BigRational(BigInt(mant * pow10(static_cast<unsigned long>(shift))));
    else
      value = BigRational(mant, pow10(static_cast<unsigned long>(-shift)));
  }
  return negative ? -value : value;
}

BigInt BigRational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt BigRational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigRational BigRational::frac() const { return *this - BigRational(floor()); }

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

long BigRational::ilog2() const {
  if (is_zero()) throw DomainError("ilog2 of zero");
  BigInt a = q_.get_num();
  if (a < 0) a = -a;
  const BigInt& b = q_.get_den();
  long e = static_cast<long>(bit_length(a)) - static_cast<long>(bit_length(b));
  bool ge = e >= 0 ? a >= (BigInt(b) << static_cast<mp_bitcnt_t>(e))
                   : (a << static_cast<mp_bitcnt_t>(-e)) >= b;
  return ge ? e : e - 1;
}

std::string BigRational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal(int digits) const {
  if (is_zero()) return "0";
  digits = std::max(digits, 1);
  BigRational a = abs();
  long e10 = static_cast<long>(std::floor(static_cast<double>(a.ilog2()) * 0.30102999566398120));
  // settle e10 so that 10^e10 <= a < 10^(e10+1)
  auto pow10r = [](long k) {
    return k >= 0 ? BigRational(pow10(static_cast<unsigned long>(k)))
                  : BigRational(BigInt(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (pow10r(e10) > a) --e10;
  while (pow10r(e10 + 1) <= a) ++e10;

  BigRational s = a * pow10r(digits - 1 - e10);
  BigInt m = (s + BigRational(BigInt(1), BigInt(2))).floor();
  if (m >= pow10(static_cast<unsigned long>(digits))) {
    m /= 10;
    ++e10;
  }
  std::string md = m.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (e10 >= -5 && e10 < digits) {
    if (e10 >= 0) {
      std::string ip = md.substr(0, static_cast<std::size_t>(e10 + 1));
      std::string fp = md.substr(static_cast<std::size_t>(e10 + 1));
      while (!fp.empty() && fp.back() == '0') fp.pop_back();
      out += ip + (fp.empty() ? "" : "." + fp);
    } else {
      std::string fp = std::string(static_cast<std::size_t>(-e10 - 1), '0') + md;
      while (!fp.empty() && fp.back() == '0') fp.pop_back();
      out += "0." + fp;
    }
  } else {
    std::string fp = md.substr(1);
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
    out += md.substr(0, 1) + (fp.empty() ? "" : "." + fp) + "e" + (e10 < 0 ? "-" : "+") +
           std::to_string(e10 < 0 ? -e10 : e10);
  }
  return out;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent == 0) return BigRational(1);
  if (base.is_zero()) {
    if (exponent < 0) throw DomainError("zero to a negative power");
    return BigRational(0);
  }
  unsigned long k = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), k);
  return exponent > 0 ? BigRational(n, d) : BigRational(d, n);
}

BigRational ldexp(const BigRational& x, long k) {
  mpq_class r;
  if (k >= 0)
    mpq_mul_2exp(r.get_mpq_t(), x.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpq_div_2exp(r.get_mpq_t(), x.raw().get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return BigRational(r);
}

BigRational round_down(const BigRational& x, long bits) {
  if (x.is_zero()) return x;
  long k = bits - 1 - x.ilog2();
  return ldexp(BigRational(scaled(x, k, false)), -k);
}

BigRational round_up(const BigRational& x, long bits) {
  if (x.is_zero()) return x;
  long k = bits - 1 - x.ilog2();
  return ldexp(BigRational(scaled(x, k, true)), -k);
}

long significant_bits(const BigRational& x) {
  if (x.is_zero()) return 0;
  BigInt num = x.numerator();
  if (num < 0) num = -num;
  BigInt den = x.denominator();
  long nb = static_cast<long>(bit_length(num) - mpz_scan1(num.get_mpz_t(), 0));
  bool dyadic = mpz_popcount(den.get_mpz_t()) == 1;
  return nb + (dyadic ? 0 : static_cast<long>(bit_length(den)));
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw DomainError("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace primecert
