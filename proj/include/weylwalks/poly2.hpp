#pragma once

#include <map>
#include <string>
#include <utility>

#include "weylwalks/quadratic.hpp"
#include "weylwalks/rational.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

enum class Axis { X = 0, Y = 1 };

inline Axis other(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }
inline const char* axisName(Axis a) { return a == Axis::X ? "x" : "y"; }

template <class T>
T fromRational(const Rational& q);
template <>
inline Rational fromRational<Rational>(const Rational& q) { return q; }
template <>
inline QuadraticNumber fromRational<QuadraticNumber>(const Rational& q) { return QuadraticNumber(q); }
template <>
inline Real fromRational<Real>(const Rational& q) { return Real(q); }
template <>
inline Complex fromRational<Complex>(const Rational& q) { return Complex(Real(q)); }

template <class T>
T integerPower(const T& base, long e) {
  if (e < 0) return fromRational<T>(Rational(1)) / integerPower(base, -e);
  T result = fromRational<T>(Rational(1));
  T b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

// Sparse Laurent polynomial in x, y with rational coefficients.
class Poly2 {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rational>;

  Poly2() = default;
  Poly2(const Rational& c) { add(0, 0, c); }
  static Poly2 monomial(const Rational& c, int ex, int ey);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(int ex, int ey) const;
  void add(int ex, int ey, const Rational& c);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& c, const Poly2& p);
  Poly2 operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
  Poly2 pow(unsigned e) const;

  int minDegree(Axis a) const;
  int maxDegree(Axis a) const;
  int totalDegree() const;

  // Substitutes the given axis variable by a rational value.
  Poly2 substitute(Axis a, const Rational& value) const;
  Poly2 derivative(Axis a) const;
  // Exact quotient by (1 - v) where v is the axis variable; throws if not divisible.
  Poly2 divideByOneMinus(Axis a) const;
  bool divisibleByOneMinus(Axis a) const { return substitute(a, 1).isZero(); }
  // Replace (x, y) by (y, x).
  Poly2 swapped() const;

  template <class T>
  T evaluate(const T& x, const T& y) const {
    T sum = fromRational<T>(Rational(0));
    for (const auto& [e, c] : terms_) sum = sum + fromRational<T>(c) * integerPower(x, e.first) * integerPower(y, e.second);
    return sum;
  }

  std::string toString() const;

 private:
  TermMap terms_;
};

}  // namespace weylwalks
