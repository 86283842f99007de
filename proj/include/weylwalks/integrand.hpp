#pragma once

#include <string>

#include "weylwalks/diagonal_gf.hpp"
#include "weylwalks/poly2.hpp"
#include "weylwalks/rational.hpp"

namespace weylwalks {

// Cauchy integrand for q(n) = CT_{x,y} [ I(x,y) P(x,y)^n ] with
//   I = weight * scale * N(x,y) / (x^monoX y^monoY (1-x)^poleX (1-y)^poleY).
// A fixed coordinate has been set to 1 by a residue and no longer varies.
struct Integrand {
  Poly2 numerator;
  Rational scale{1};
  Rational weight{1};
  int monoX = 0, monoY = 0;
  int poleX = 0, poleY = 0;
  bool fixedX = false, fixedY = false;
  std::string history;

  static Integrand fromGF(const FactoredRational& fr);

  bool fixed(Axis a) const { return a == Axis::X ? fixedX : fixedY; }
  int pole(Axis a) const { return a == Axis::X ? poleX : poleY; }
  int mono(Axis a) const { return a == Axis::X ? monoX : monoY; }
  int freeCount() const { return (fixedX ? 0 : 1) + (fixedY ? 0 : 1); }

  // Value of weight*scale*N/(monomial*poles); fixed coordinates read as 1.
  template <class T>
  T evaluate(const T& x, const T& y) const {
    T one = fromRational<T>(Rational(1));
    T xx = fixedX ? one : x, yy = fixedY ? one : y;
    T v = fromRational<T>(weight * scale) * numerator.evaluate(xx, yy);
    v = v / (integerPower(xx, monoX) * integerPower(yy, monoY));
    if (poleX) v = v / integerPower(T(one - xx), poleX);
    if (poleY) v = v / integerPower(T(one - yy), poleY);
    return v;
  }
};

}  // namespace weylwalks
