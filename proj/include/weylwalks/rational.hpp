#pragma once

#include <gmpxx.h>

#include <string>

namespace weylwalks {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q" or "p" with optional sign; throws ParseError otherwise.
Rational parseRational(const std::string& text);
std::string toString(const Rational& q);
std::string toString(const Integer& z);
// Fixed-point decimal rendering with the given number of significant digits.
std::string toDecimal(const Rational& q, int digits = 30);

Rational powRational(const Rational& base, long exponent);
int compare(const Rational& a, const Rational& b);

}  // namespace weylwalks
