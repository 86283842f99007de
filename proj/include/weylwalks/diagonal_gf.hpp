#pragma once

#include <cstddef>
#include <vector>

#include "weylwalks/model.hpp"
#include "weylwalks/poly2.hpp"
#include "weylwalks/quadratic.hpp"
#include "weylwalks/rational.hpp"

namespace weylwalks {

// F = scalar * G(x,y) / ((1 - t K(x,y)) (1-x) x (1-y) y), G the product of the
// numerator factors. H0 = 1 - t K, H1 = 1 - x, H2 = 1 - y.
struct FactoredRational {
  Model model;
  Weights weights;
  std::vector<Poly2> numeratorFactors;
  Rational scalar;  // 1/(a^3 b^3)
  Poly2 kernel;     // K = xy * S(1/x, 1/y)

  Poly2 numerator() const;
  // Evaluates F at a point with t given; used for identity checks.
  template <class T>
  T evaluate(const T& x, const T& y, const T& t) const {
    T one = fromRational<T>(Rational(1));
    T g = numerator().evaluate(x, y);
    T h0 = one - t * kernel.evaluate(x, y);
    return fromRational<T>(scalar) * g / (h0 * (one - x) * x * (one - y) * y);
  }
};

FactoredRational buildGF(const Model& model, const Weights& weights);

// Dense truncated power series in (x, y, t): exponents i < nx, j < ny, k < nt.
class SeriesBox {
 public:
  SeriesBox(std::size_t nx, std::size_t ny, std::size_t nt);
  static SeriesBox fromPoly(const Poly2& p, std::size_t nx, std::size_t ny, std::size_t nt);
  // Series of 1/(1 - t K) built slice by slice: slice k = K^k.
  static SeriesBox kernelInverse(const Poly2& K, std::size_t nx, std::size_t ny, std::size_t nt);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t nt() const { return nt_; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }

  friend SeriesBox operator*(const SeriesBox& f, const SeriesBox& g);
  // Requires a nonzero constant term.
  SeriesBox reciprocal() const;
  // Multiplication by 1/(1 - x) or 1/(1 - y) (prefix sums along the axis).
  SeriesBox divideByOneMinus(Axis a) const;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (k * ny_ + j) * nx_ + i; }
  std::size_t nx_, ny_, nt_;
  std::vector<Rational> c_;
};

struct DiagonalConfig {
  std::size_t seriesCap = 16;
};

// [x^n y^n t^n] F by truncated series expansion.
Rational diagonalCoefficient(const FactoredRational& fr, std::size_t n, const DiagonalConfig& config = {});
// All coefficients 0..N from one series box.
std::vector<Rational> diagonalCoefficients(const FactoredRational& fr, std::size_t N,
                                           const DiagonalConfig& config = {});

// Total order of vanishing of f at (x0, y0): smallest k with a nonzero k-th derivative.
int vanishingOrder(const Poly2& f, const QuadraticNumber& x0, const QuadraticNumber& y0, int maxOrder = 12);
// Per-factor vanishing orders of the numerator at (x0, y0).
std::vector<int> numeratorVanishingOrders(const FactoredRational& fr, const QuadraticNumber& x0,
                                          const QuadraticNumber& y0);

}  // namespace weylwalks
