#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "primecert/certify.hpp"
#include "primecert/report.hpp"
#include "primecert/sieve.hpp"

namespace primecert {

/// Stirling envelopes of x!:
///   l(x) = sqrt(2 pi) x^(x+1/2) e^(-x + 1/(12x+1))
///   u(x) = sqrt(2 pi) x^(x+1/2) e^(-x + 1/(12x))
struct StirlingBounds {
  BigRational x;
  Expr lower;
  Expr upper;
};

/// Expressions only; x > 0.
StirlingBounds stirling_exprs(const BigRational& x);
Expr stirling_lower(const BigRational& x);
Expr stirling_upper(const BigRational& x);

/// Enclosures of (l(x), u(x)); throws UsageError for x < 1.
std::pair<Enclosure, Enclosure> stirling(const BigRational& x, long precision);

/// One inequality checked in its stated form and in an equivalent form
/// derived from it, with a cross-check that the two verdicts agree.
struct LemmaCheck {
  std::string id;
  std::uint64_t n = 0;
  bool in_range = true;  // n within the range the inequality is claimed for
  Certificate stated;
  Certificate equivalent;
  std::vector<std::pair<std::string, Certificate>> extras;
  std::vector<std::string> notes;

  bool forms_agree() const { return stated.status == equivalent.status; }
  /// The stated verdict when both forms agree, undecided otherwise.
  CertStatus status() const { return forms_agree() ? stated.status : CertStatus::undecided; }
  CheckReport to_report() const;
};

/// Lemma inequalities of the e^(...) <= 1 / >= 0.999986 family (parts 1..3)
/// and the (4n+3)/(n-3) < 4.002202 bound (part 4). Throws UsageError for a
/// part outside 1..4; an n outside the claimed range is flagged, not rejected.
LemmaCheck lemma31_check(int part, std::uint64_t n, long precision = kDefaultMaxPrecision);

/// First n at which each part's claim begins.
std::uint64_t lemma31_threshold(int part);

/// (252n+5)/(2880n^2+48n), the rational form of part 1's exponent (negated).
BigRational lemma31_part1_rational(std::uint64_t n);

/// 0.054886 / (2^(n/2) n^(3/2)) (3125/256)^(n/6) > (5n)^(2.51012 sqrt(5n)/log(5n)).
/// `equivalent` is the normalised form
///   (1/6)[5 log 5 - 11 log 2] > 2.51012 sqrt5/sqrt n + (3/2) log n/n - log(0.054886)/n.
/// The extras include the comparison against the intermediate constant 0.0742.
LemmaCheck lemma32_check(std::uint64_t n, long precision = kDefaultMaxPrecision);

Expr lemma32_lhs(std::uint64_t n);
Expr lemma32_rhs(std::uint64_t n);
/// Right-hand side of the normalised form; decreasing in n.
Expr lemma32_normalised_rhs(std::uint64_t n);
Expr lemma32_normalised_lhs();

/// pi(x) <= 1.25506 x / log x with pi(x) from the sieve.
Certificate pi_upper_check(const PrimeTable& table, std::uint64_t x, long precision = kDefaultMaxPrecision);
Certificate pi_upper_check(std::uint64_t x, long precision = kDefaultMaxPrecision);

/// (5n)^(2.51012 sqrt(5n)/log(5n))
Expr t1_bound_expr(std::uint64_t n);

struct T1Chain {
  std::uint64_t n = 0;
  Enclosure bound;            // enclosure of t1_bound_expr(n)
  BigInt t1;                  // exact T1
  std::uint64_t pi_sqrt = 0;  // pi(sqrt(5n))
  Certificate exact_link;     // T1 < (5n)^pi(sqrt(5n))
  Certificate analytic_link;  // (5n)^pi(sqrt(5n)) <= bound

  bool passed() const { return exact_link.proved() && analytic_link.proved(); }
};

/// Requires n >= 2; the table must reach 5n.
T1Chain t1_bound(std::uint64_t n, const PrimeTable& table, long precision = kDefaultMaxPrecision);
T1Chain t1_bound(std::uint64_t n, long precision = kDefaultMaxPrecision);

/// Part 1: g(x) = u(x+c)/(l(c) l(x)) nondecreasing along the grid (x >= 1/2,
/// c >= 1/12). Part 2: h(x) = u(c)/(l(x) l(c-x)) increasing up to c/2 and
/// decreasing after it (1/2 <= x <= c - 1/2), plus h(x) = h(c-x).
/// Grid points outside the part's domain raise UsageError.
CheckReport lemma23_grid_check(int part, const BigRational& c, std::vector<BigRational> grid,
                               long precision = kDefaultMaxPrecision);

/// Evenly spaced points from a to b inclusive, `per_unit` per unit length.
std::vector<BigRational> uniform_grid(const BigRational& a, const BigRational& b, long per_unit = 64);

/// The constants of the final chain are mutually consistent:
///   0.446024 <= sqrt(5/(8 pi)) * 0.999986
///   1.576958 >= (5/4) sqrt(5/pi)
///   5.153158 >= sqrt(125/(24 pi)) * 4.002202
///   0.054886 <= 0.446024 / (1.576958 * 5.153158)
std::vector<std::pair<std::string, Certificate>> chain_constants_check(long precision = kDefaultMaxPrecision);

}  // namespace primecert
