#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "primecert/certify.hpp"
#include "primecert/errors.hpp"
#include "primecert/transcendental.hpp"

using namespace primecert;

namespace {

bool meets(const Enclosure& e, const oracle::Bracket& b) { return e.lo() <= b.hi && b.lo <= e.hi(); }

BigRational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return BigRational(BigInt(num(rng)), BigInt(den(rng)));
}

// q in (0, 100]
BigRational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 1'000'000);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(1, 100 * d);
  return BigRational(BigInt(num(rng)), BigInt(d));
}

Expr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  std::uniform_int_distribution<long> small(1, 40);
  switch (pick(rng)) {
    case 0:
      return Expr(BigRational(BigInt(small(rng)), BigInt(small(rng))));
    case 1:
      return Expr::pi();
    case 2:
      return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
    case 3:
      return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
    case 4:
      return exp(Expr(BigRational(BigInt(small(rng)), BigInt(8))) - Expr(2));
    case 5:
      return log(Expr(BigRational(BigInt(small(rng)), BigInt(3))));
    case 6:
      return sqrt(Expr(BigRational(BigInt(small(rng)), BigInt(7))));
    default:
      return pow(Expr(BigRational(BigInt(small(rng)), BigInt(5))), BigRational(BigInt(small(rng)), BigInt(6)));
  }
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(BigRational::parse("0.999986") == BigRational(BigInt(499993), BigInt(500000)));
  CHECK(BigRational::parse("168033/100000").str() == "168033/100000");
  CHECK(BigRational::parse("-6/4").str() == "-3/2");
  CHECK(BigRational::parse("1.5e-3") == BigRational(BigInt(3), BigInt(2000)));
  CHECK(BigRational::parse("2.8063995").denominator() == BigInt(2000000));
  CHECK_THROWS_AS(BigRational::parse("1/0"), UsageError);
  CHECK_THROWS_AS(BigRational::parse("abc"), UsageError);
  CHECK_THROWS_AS(BigRational::parse(""), UsageError);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DomainError);

  const BigRational q(BigInt(-12), BigInt(-18));
  CHECK(q.numerator() == 2);
  CHECK(q.denominator() == 3);
}

TEST_CASE("rational arithmetic matches schoolbook cross-multiplication") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const BigRational x{BigInt(a), BigInt(b)}, y{BigInt(c), BigInt(d)};
    CHECK(x + y == BigRational(BigInt(a * d + c * b), BigInt(b * d)));
    CHECK(x - y == BigRational(BigInt(a * d - c * b), BigInt(b * d)));
    CHECK(x * y == BigRational(BigInt(a * c), BigInt(b * d)));
    if (c != 0) CHECK(x / y == BigRational(BigInt(a * d), BigInt(b * c)));
    CHECK(gcd(x.numerator(), x.denominator()) == 1);
    CHECK(x.denominator() > 0);
  }
}

TEST_CASE("floor, ceil, rounding helpers") {
  const BigRational x(BigInt(-7), BigInt(2));
  CHECK(x.floor() == -4);
  CHECK(x.ceil() == -3);
  CHECK(x.frac() == BigRational(BigInt(1), BigInt(2)));
  CHECK(BigRational(BigInt(3), BigInt(4)).ilog2() == -1);
  CHECK(BigRational(8).ilog2() == 3);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const BigRational v = random_rational(rng, 1'000'000'000, 999'983);
    if (v.is_zero()) continue;
    const BigRational lo = round_down(v, 20), hi = round_up(v, 20);
    CHECK(lo <= v);
    CHECK(v <= hi);
    CHECK(significant_bits(lo) <= 20);
    CHECK(significant_bits(hi) <= 21);
  }
  CHECK(BigRational(BigInt(1718141), BigInt(133877484384)).to_decimal(6) == "0.0000128337");
  CHECK(BigRational(BigInt(1), BigInt(3)).to_decimal(4) == "0.3333");
}

TEST_CASE("interval operations enclose every pointwise result") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    BigRational a = random_rational(rng, 100, 17), b = random_rational(rng, 100, 17);
    BigRational c = random_rational(rng, 100, 13), d = random_rational(rng, 100, 13);
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    const Enclosure x(a, b), y(c, d);
    for (const auto& p : {a, b, (a + b) / BigRational(2)}) {
      for (const auto& q : {c, d, (c + d) / BigRational(2)}) {
        CHECK(interval::add(x, y, 24).contains(p + q));
        CHECK(interval::sub(x, y, 24).contains(p - q));
        CHECK(interval::mul(x, y, 24).contains(p * q));
        if (!y.contains(BigRational(0))) CHECK(interval::div(x, y, 24).contains(p / q));
        CHECK(interval::pow(x, 3, 24).contains(p * p * p));
        CHECK(interval::pow(x, 2, 24).contains(p * p));
      }
    }
  }
  CHECK_THROWS_AS(interval::div(Enclosure(BigRational(1)), Enclosure(BigRational(-1), BigRational(1)), 64),
                  DomainError);
  CHECK_THROWS_AS(Enclosure(BigRational(2), BigRational(1)), DomainError);
}

TEST_CASE("log enclosure examples") {
  CHECK(log_enclosure(BigRational(1), 64) == Enclosure(BigRational(0)));
  const Enclosure l2 = log_enclosure(BigRational(2), 128);
  CHECK(meets(l2, oracle::log_of(BigRational(2))));
  CHECK(l2.lo() < BigRational::parse("0.69314718055994530942"));
  CHECK(l2.hi() > BigRational::parse("0.69314718055994530941"));

  // 3125/256 = 5^5 / 2^8
  const Enclosure lx = log_enclosure(BigRational(BigInt(3125), BigInt(256)), 128);
  const Enclosure ident = interval::sub(interval::mul(Enclosure(BigRational(5)), log_enclosure(BigRational(5), 128), 160),
                                        interval::mul(Enclosure(BigRational(8)), l2, 160), 160);
  CHECK(lx.lo() <= ident.hi());
  CHECK(ident.lo() <= lx.hi());
  CHECK_THROWS_AS(log_enclosure(BigRational(0), 64), DomainError);
  CHECK_THROWS_AS(log_enclosure(BigRational(-3), 64), DomainError);
}

TEST_CASE("exp enclosure examples") {
  CHECK(exp_enclosure(BigRational(0), 64) == Enclosure(BigRational(1)));
  const Enclosure e = exp_enclosure(BigRational(1), 96);
  CHECK(e.lo() < BigRational::parse("2.71828182845904523537"));
  CHECK(e.hi() > BigRational::parse("2.71828182845904523536"));
  CHECK(meets(e, oracle::exp_of(BigRational(1))));

  const BigRational q = BigRational(BigInt(1), BigInt(409081)) - BigRational(BigInt(1), BigInt(327264)) -
                        BigRational(BigInt(1), BigInt(81816));
  CHECK(exp_enclosure(q, 64).lo() > BigRational::parse("0.999986"));

  const Enclosure tiny = exp_enclosure(BigRational(-50), 80);
  CHECK(meets(tiny, oracle::exp_of(BigRational(-50))));
}

TEST_CASE("sqrt enclosure examples") {
  CHECK(sqrt_enclosure(BigRational(4), 64) == Enclosure(BigRational(2)));
  CHECK(sqrt_enclosure(BigRational(BigInt(9), BigInt(49)), 64) == Enclosure(BigRational(BigInt(3), BigInt(7))));
  const Enclosure s5 = sqrt_enclosure(BigRational(5), 64);
  CHECK(meets(s5, oracle::sqrt_of(BigRational(5))));
  CHECK(s5.lo() > BigRational::parse("2.2360679774"));
  CHECK(s5.hi() < BigRational::parse("2.2360679775"));
  const Enclosure s = sqrt_enclosure(BigRational(34090), 64);
  CHECK(s.lo() > BigRational::parse("184.634"));
  CHECK(s.hi() < BigRational::parse("184.636"));
  CHECK(meets(s, oracle::sqrt_of(BigRational(34090))));
  CHECK_THROWS_AS(sqrt_enclosure(BigRational(-1), 64), DomainError);
}

TEST_CASE("pi enclosure against MPFR") {
  const Enclosure p = pi_enclosure(180);
  const BigRational ref = oracle::Real::pi().rational();
  CHECK(p.lo() <= ref + BigRational::parse("1e-58"));
  CHECK(ref - BigRational::parse("1e-58") <= p.hi());
  CHECK(p.width() < BigRational::parse("1e-50"));
}

TEST_CASE("transcendental containment and width on random arguments") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const BigRational q = random_positive(rng);
    const long p = 64 + static_cast<long>(rng() % 3) * 32;
    const Enclosure l = log_enclosure(q, p), e = exp_enclosure(q, p), s = sqrt_enclosure(q, p);
    CHECK(meets(l, oracle::log_of(q)));
    CHECK(meets(e, oracle::exp_of(q)));
    CHECK(meets(s, oracle::sqrt_of(q)));

    const BigRational ulp = ldexp(BigRational(1), -p);
    const BigRational lmag = std::max(BigRational(1), l.hi().abs());
    CHECK(l.width() <= ulp * lmag);
    CHECK(e.width() <= ulp * e.hi());
    CHECK(s.width() <= ulp * std::max(BigRational(1), s.hi()));
  }
}

TEST_CASE("eval examples and domain errors") {
  CHECK(eval(Expr(BigRational(BigInt(3), BigInt(4))), 64) == Enclosure(BigRational(BigInt(3), BigInt(4))));
  const Enclosure le = eval(log(exp(Expr(1))), 64);
  CHECK(le.contains(BigRational(1)));
  const Enclosure le2 = eval(log(exp(Expr(1))), 256);
  CHECK(le2.width() < le.width());

  try {
    eval(Expr(1) + log(Expr(0) - Expr(2)), 64);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("log") != std::string::npos);
  }
  CHECK_THROWS_AS(eval(sqrt(Expr(-1)), 64), DomainError);
  CHECK_THROWS_AS(eval(Expr(1) / (Expr::pi() - Expr::pi()), 64), DomainError);

  // integer powers of rationals are exact
  const Enclosure cube = eval(pow(Expr(BigRational(BigInt(3125), BigInt(256))), BigRational(3)), 64);
  CHECK(cube == Enclosure(pow(BigRational(BigInt(3125), BigInt(256)), 3)));
}

TEST_CASE("monotone refinement on random expression trees") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const Expr e = random_tree(rng, 4);
    Enclosure prev = eval(e, 48);
    for (long p = 56; p <= 256; p += 8) {
      const Enclosure next = eval(e, p);
      INFO(e.str() << " at " << p << ": " << next.width().to_decimal(4) << " vs " << prev.width().to_decimal(4));
      CHECK(next.width() <= prev.width());
      CHECK(next.lo() <= prev.hi());
      CHECK(prev.lo() <= next.hi());
      prev = next;
    }
  }
}

TEST_CASE("certify examples") {
  const Certificate a = certify(Expr(BigRational(BigInt(1718141), BigInt(133877484384))), Relation::less,
                                Expr::literal("0.000014"));
  CHECK(a.proved());
  CHECK(certify(log(Expr(1)), Relation::greater, Expr(0)).refuted());
  const BigRational q23 = BigRational(BigInt(1), BigInt(30)) - BigRational(BigInt(1), BigInt(25)) -
                          BigRational(BigInt(1), BigInt(7));
  CHECK(certify(Expr(1), Relation::greater_equal, exp(Expr(q23))).proved());
  CHECK(certify(Expr(1), Relation::less_equal, Expr(1)).proved());
  CHECK(certify(Expr(1), Relation::less, Expr(1)).refuted());
}

TEST_CASE("no false certainty on equal transcendental sides") {
  for (long p : {64L, 128L, 512L, 1024L}) {
    const Certificate c = certify(log(Expr(2)), Relation::less, log(Expr(2)), p);
    CHECK(c.status == CertStatus::undecided);
    CHECK(c.precision_used == p);
    CHECK(certify(sqrt(Expr(2)), Relation::less_equal, sqrt(Expr(2)), p).status == CertStatus::undecided);
  }
}

TEST_CASE("certifier soundness on random rational pairs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    BigRational a = random_rational(rng, 1'000'000, 1'000'000), b = random_rational(rng, 1'000'000, 1'000'000);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    CHECK(certify(Expr(a), Relation::less, Expr(b)).proved());
    CHECK(certify(Expr(a), Relation::greater, Expr(b)).refuted());
    CHECK(certify(Expr(b), Relation::greater_equal, Expr(a)).proved());
  }
}

TEST_CASE("classify rule") {
  const Enclosure pos(BigRational(1), BigRational(2)), zero(BigRational(0)), straddle(BigRational(-1), BigRational(1));
  CHECK(classify(Relation::less, pos) == CertStatus::proved);
  CHECK(classify(Relation::less, zero) == CertStatus::refuted);
  CHECK(classify(Relation::less_equal, zero) == CertStatus::proved);
  CHECK(classify(Relation::greater, straddle) == CertStatus::undecided);
  CHECK(classify(Relation::greater_equal, Enclosure(BigRational(-2), BigRational(-1))) == CertStatus::refuted);
}
