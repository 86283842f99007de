#pragma once

#include <string>

#include "weylwalks/rational.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

// q0 + q1*sqrt(d) with rational q0, q1 and a positive integer radicand d.
// d == 1 exactly when the number is rational. The radicand has its small
// square factors removed; numbers from different fields still combine when
// their radicands differ by a square factor.
class QuadraticNumber {
 public:
  QuadraticNumber() : q0_(0), q1_(0), d_(1) {}
  QuadraticNumber(const Rational& q) : q0_(q), q1_(0), d_(1) {}
  QuadraticNumber(long v) : q0_(v), q1_(0), d_(1) {}
  QuadraticNumber(const Rational& q0, const Rational& q1, const Integer& d);

  static QuadraticNumber sqrtOf(const Rational& r);

  const Rational& q0() const { return q0_; }
  const Rational& q1() const { return q1_; }
  const Integer& radicand() const { return d_; }
  bool isRational() const { return d_ == 1; }
  const Rational& rationalValue() const;

  Real toReal() const;
  double toDouble() const;
  // Exact rendering, e.g. "37/4" or "1/4 + 2*sqrt(3)".
  std::string toString() const;
  int sign() const;

  QuadraticNumber operator-() const { return QuadraticNumber(-q0_, -q1_, d_); }
  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);
  QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
  QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
  QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }
  QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this = *this / o; }

  // Exact three-way comparison; works across different radicands.
  friend int compare(const QuadraticNumber& a, const QuadraticNumber& b);
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) == 0; }
  friend bool operator!=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) != 0; }
  friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) < 0; }
  friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) > 0; }
  friend bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) >= 0; }

 private:
  Rational q0_, q1_;
  Integer d_;
};

// Sign of u + v*sqrt(d).
int signOf(const Rational& u, const Rational& v, const Integer& d);
// Sign of u + v*sqrt(d) + w*sqrt(e).
int signOf(const Rational& u, const Rational& v, const Integer& d, const Rational& w, const Integer& e);

}  // namespace weylwalks
