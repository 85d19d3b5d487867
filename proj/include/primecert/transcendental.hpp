#pragma once

#include "primecert/enclosure.hpp"

namespace primecert {

// Certified enclosures of elementary functions at rational arguments.
//
// log: argument reduction by exact powers of two into [3/4, 3/2), then the
//      atanh series log m = 2 atanh((m-1)/(m+1)) with an explicit geometric
//      remainder bound. Width <= 2^-precision * max(1, |log q|).
// exp: exact halving until |q| < 1/32, Taylor series whose tail is bounded by
//      twice the first omitted term, then repeated squaring with directed
//      rounding. Relative width <= 2^-precision.
// sqrt: integer square roots of the scaled argument; a single point when q
//      is the square of a rational.
// pi:  Machin's formula 16 atan(1/5) - 4 atan(1/239).
//
// All series run in fixed point over big integers and carry an explicit ulp
// error count, so no platform floating point is involved anywhere.

Enclosure log_enclosure(const BigRational& q, long precision);
Enclosure exp_enclosure(const BigRational& q, long precision);
Enclosure sqrt_enclosure(const BigRational& q, long precision);
Enclosure pi_enclosure(long precision);

// Monotone lifts to enclosure arguments.
Enclosure log_enclosure(const Enclosure& x, long precision);
Enclosure exp_enclosure(const Enclosure& x, long precision);
Enclosure sqrt_enclosure(const Enclosure& x, long precision);

}  // namespace primecert
