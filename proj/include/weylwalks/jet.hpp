#pragma once

#include <cstddef>
#include <vector>

#include "weylwalks/integrand.hpp"
#include "weylwalks/model.hpp"
#include "weylwalks/poly2.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

inline constexpr int kMaxJetOrder = 48;

// Truncated Taylor series in 1 or 2 variables with complex coefficients,
// stored by total degree: degree d occupies d(d+1)/2 .. d(d+1)/2 + d (arity 2).
class Jet {
 public:
  Jet(int arity, int order);
  static Jet constant(int arity, int order, const Complex& c);
  static Jet variable(int arity, int order, int k);
  // exp(c0 theta_0 + c1 theta_1)
  static Jet expLinear(int arity, int order, const Complex& c0, const Complex& c1);

  int arity() const { return arity_; }
  int order() const { return order_; }
  std::size_t size() const { return c_.size(); }

  // Coefficient of theta_0^i theta_1^j.
  Complex& at(int i, int j = 0) { return c_[index(i, j)]; }
  const Complex& at(int i, int j = 0) const { return c_[index(i, j)]; }
  static std::size_t offset(int arity, int d) { return arity == 1 ? d : static_cast<std::size_t>(d) * (d + 1) / 2; }
  static int componentSize(int arity, int d) { return arity == 1 ? 1 : d + 1; }
  std::size_t index(int i, int j) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Complex& s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, const Complex& s) { return a *= s; }
  Jet operator-() const;

  Jet reciprocal() const;
  Jet exp() const;
  Jet log() const;
  Jet pow(unsigned e) const;
  // Drops every component of total degree below d.
  Jet dropBelow(int d) const;
  Jet withOrder(int order) const;

  Complex evaluate(const std::vector<Complex>& theta) const;
  // Largest coefficient modulus.
  Real norm() const;

 private:
  int arity_, order_;
  std::vector<Complex> c_;
};

// Jet at theta = 0 of phi(theta) = log(P(z0) / P(z0 * e^{i theta})), theta over the kept axes;
// coordinates on other axes are held at their z0 values.
Jet jetOfPhase(const Poly2& P, const Complex& x0, const Complex& y0, const std::vector<Axis>& kept, int order);
Jet jetOfPhase(const Model& model, const Weights& weights, const Complex& x0, const Complex& y0,
               const std::vector<Axis>& kept, int order);
// Jet of the integrand I on the torus z = z0 e^{i theta}; with dz/(iz) = d theta the
// constant term extraction becomes (2 pi)^-d times the integral of I P^n over theta.
Jet jetOfAmplitude(const Integrand& term, const Complex& x0, const Complex& y0, const std::vector<Axis>& kept,
                   int order);
// Jet of c * x^ex * y^ey on the torus.
Jet jetOfMonomial(const Rational& c, int ex, int ey, const Complex& x0, const Complex& y0,
                  const std::vector<Axis>& kept, int order);

}  // namespace weylwalks
