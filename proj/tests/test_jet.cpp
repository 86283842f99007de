#include <random>

#include "doctest.h"
#include "weylwalks/errors.hpp"
#include "weylwalks/fl_asymptotics.hpp"
#include "weylwalks/jet.hpp"

using namespace weylwalks;

namespace {

Real maxDiff(const Jet& a, const Jet& b) {
  Real m(0L);
  for (int d = 0; d <= a.order(); ++d)
    for (int i = 0; i < Jet::componentSize(a.arity(), d); ++i) {
      int ii = a.arity() == 1 ? d : d - i, jj = a.arity() == 1 ? 0 : i;
      Real e = abs(a.at(ii, jj) - b.at(ii, jj));
      if (e > m) m = e;
    }
  return m;
}

Jet randomJet(int arity, int order, std::mt19937& rng, bool zeroConstant) {
  std::uniform_real_distribution<double> u(-1, 1);
  Jet j(arity, order);
  for (int d = 0; d <= order; ++d)
    for (int i = 0; i < Jet::componentSize(arity, d); ++i) {
      int ii = arity == 1 ? d : d - i, jj = arity == 1 ? 0 : i;
      j.at(ii, jj) = Complex(Real(u(rng)), Real(u(rng)));
    }
  if (zeroConstant) j.at(0, 0) = Complex(0.0);
  else j.at(0, 0) = Complex(Real(2.0 + u(rng)), Real(u(rng)));
  return j;
}

// log P(z0) - log P(z0 e^{i theta}) evaluated directly.
Complex directPhase(const Poly2& P, const Complex& x0, const Complex& y0, const Complex& tx, const Complex& ty) {
  Complex i(Real(0L), Real(1L));
  Complex x = x0 * exp(i * tx), y = y0 * exp(i * ty);
  return log(P.evaluate(x0, y0)) - log(P.evaluate(x, y));
}

}  // namespace

TEST_CASE("jet ring laws") {
  std::mt19937 rng(29);
  for (int arity : {1, 2}) {
    Jet a = randomJet(arity, 10, rng, false), b = randomJet(arity, 10, rng, false), c = randomJet(arity, 10, rng, false);
    CHECK(maxDiff((a * b) * c, a * (b * c)) < Real(1e-25));
    CHECK(maxDiff(a * (b + c), a * b + a * c) < Real(1e-25));
    CHECK(maxDiff(a * b, b * a) < Real(1e-28));
    Jet one = Jet::constant(arity, 10, Complex(1.0));
    CHECK(maxDiff(a * a.reciprocal(), one) < Real(1e-25));
    CHECK(maxDiff(a.log().exp(), a) < Real(1e-24));
    Jet f = randomJet(arity, 10, rng, true);
    CHECK(maxDiff(f.exp().log(), f) < Real(1e-24));
    CHECK(maxDiff(a.pow(3), a * a * a) < Real(1e-25));
    CHECK(maxDiff(-a + a, Jet(arity, 10)) == Real(0L));
  }
  CHECK_THROWS_AS(Jet(2, kMaxJetOrder + 1), ResourceError);
}

TEST_CASE("expLinear and truncation") {
  Complex i(Real(0L), Real(1L));
  Jet e = Jet::expLinear(2, 8, i, Complex(2.0));
  Complex t0(0.01), t1(-0.02);
  Complex direct = exp(i * t0 + Complex(2.0) * t1);
  CHECK(abs(e.evaluate({t0, t1}) - direct) < Real(1e-18));
  Jet v = Jet::variable(2, 6, 1);
  Jet d = (v * v * v).dropBelow(3);
  CHECK(d.at(0, 3).re == Real(1L));
  CHECK((v * v).dropBelow(3).norm() == Real(0L));
  CHECK(v.withOrder(3).order() == 3);
}

TEST_CASE("phase jet agrees with direct evaluation") {
  Model T = Model::tandem();
  Weights w(Rational(1, 2), Rational(1, 3));
  Poly2 P = Inventory(T, w).P();
  Complex x0(Real(Rational(1, 2))), y0(Real(Rational(1, 3)));
  Jet phi = jetOfPhase(P, x0, y0, {Axis::X, Axis::Y}, 14);
  Complex t0(0.01), t1(0.007);
  CHECK(abs(phi.evaluate({t0, t1}) - directPhase(P, x0, y0, t0, t1)) < Real(1e-22));
  // First derivative by central differences.
  Real h(1e-6);
  Complex at = Complex(Real(0.003));
  Complex fd = (directPhase(P, x0, y0, at + Complex(h), Complex(0.0)) -
                directPhase(P, x0, y0, at - Complex(h), Complex(0.0))) /
               Complex(Real(2L) * h);
  Jet dphi(2, 13);
  for (int d = 1; d <= 14; ++d) dphi.at(d - 1, 0) = phi.at(d, 0) * Complex(Real(static_cast<long>(d)));
  CHECK(abs(dphi.evaluate({at, Complex(0.0)}) - fd) < Real(1e-8));
}

TEST_CASE("phase jet is stable under precision doubling") {
  Model D = Model::doubleTandem();
  Weights w(Rational(3, 7), Rational(5, 4));
  Poly2 P = Inventory(D, w).P();
  auto build = [&]() {
    Complex x0(Real(Rational(2, 3))), y0(Real(Rational(5, 6)));
    return jetOfPhase(P, x0, y0, {Axis::X, Axis::Y}, 12);
  };
  Jet lo = build();
  PrecisionScope s(212);
  Jet hi = build();
  CHECK(maxDiff(lo, hi) < Real(1e-20));
}

TEST_CASE("phase at the minimiser is quadratic with the log-Hessian") {
  Model T = Model::tandem();
  Weights w(Rational(1, 2), Rational(1, 2));
  Poly2 P = Inventory(T, w).P();
  Complex x0(Real(Rational(1, 2))), y0(Real(Rational(1, 2)));
  Jet phi = jetOfPhase(P, x0, y0, {Axis::X, Axis::Y}, 6);
  CHECK(abs(phi.at(0, 0)) < Real(1e-30));
  CHECK(abs(phi.at(1, 0)) < Real(1e-30));
  CHECK(abs(phi.at(0, 1)) < Real(1e-30));
  // phi = (1/2) theta^T H theta + ..., H = sum c_e e e^T z^e / P.
  Real p0 = P.evaluate(Real(0.5), Real(0.5));
  Real hxx(0L), hxy(0L), hyy(0L);
  for (const auto& [e, c] : P.terms()) {
    Real m = Real(c) * integerPower(Real(0.5), e.first) * integerPower(Real(0.5), e.second);
    hxx += m * Real(static_cast<long>(e.first * e.first));
    hxy += m * Real(static_cast<long>(e.first * e.second));
    hyy += m * Real(static_cast<long>(e.second * e.second));
  }
  CHECK(abs(phi.at(2, 0) - Complex(hxx / p0 / Real(2L))) < Real(1e-28));
  CHECK(abs(phi.at(1, 1) - Complex(hxy / p0)) < Real(1e-28));
  CHECK(abs(phi.at(0, 2) - Complex(hyy / p0 / Real(2L))) < Real(1e-28));

  // One kept axis with x held at 1: the minimiser of P(1, y).
  Weights ax(4, 2);
  Poly2 Pa = Inventory(T, ax).P();
  Rational cp(0), cm(0);
  for (const auto& [e, c] : Pa.terms()) {
    if (e.second == 1) cp += c;
    if (e.second == -1) cm += c;
  }
  Real ys = sqrt(Real(cm) / Real(cp));
  Jet phiY = jetOfPhase(Pa, Complex(1.0), Complex(ys), {Axis::Y}, 6);
  CHECK(abs(phiY.at(1)) < Real(1e-28));
  CHECK(phiY.at(2).re > Real(0L));
}

TEST_CASE("amplitude and monomial jets") {
  Complex x0(Real(Rational(1, 2))), y0(Real(Rational(1, 3)));
  Integrand flat;
  flat.numerator = Poly2(Rational(3));
  Jet a = jetOfAmplitude(flat, x0, y0, {Axis::X, Axis::Y}, 5);
  CHECK(a.at(0, 0).re == Real(3L));
  CHECK(a.norm() == Real(3L));

  // 1 / (1 - y0 e^{i theta}) at y0 = 1/2: value 2, first coefficient 2i.
  Integrand pole;
  pole.numerator = Poly2(Rational(1));
  pole.poleY = 1;
  pole.fixedX = true;
  Jet p = jetOfAmplitude(pole, Complex(1.0), Complex(0.5), {Axis::Y}, 4);
  CHECK(abs(p.at(0) - Complex(2.0)) < Real(1e-30));
  CHECK(abs(p.at(1) - Complex(Real(0L), Real(2L))) < Real(1e-30));

  // Product rule for monomials.
  Jet m1 = jetOfMonomial(Rational(2, 3), 2, -1, x0, y0, {Axis::X, Axis::Y}, 8);
  Jet m2 = jetOfMonomial(Rational(5), -3, 4, x0, y0, {Axis::X, Axis::Y}, 8);
  Jet m12 = jetOfMonomial(Rational(10, 3), -1, 3, x0, y0, {Axis::X, Axis::Y}, 8);
  CHECK(maxDiff(m1 * m2, m12) < Real(1e-27));

  // The full integrand agrees with its pointwise value at theta = 0.
  Weights w(3, 5);
  Integrand g = Integrand::fromGF(buildGF(Model::tandem(), w));
  Jet gj = jetOfAmplitude(g, x0, y0, {Axis::X, Axis::Y}, 3);
  Real direct = g.evaluate(Real(Rational(1, 2)), Real(Rational(1, 3)));
  CHECK(abs(gj.at(0, 0) - Complex(direct)) < abs(direct) * Real(1e-28));
}

TEST_CASE("axial summand amplitude at the dominant point") {
  // Tandem (4, 2): after the residue at x = 1 the amplitude at y = 1 is 49/32.
  Weights w(4, 2);
  AsymptoticEstimate est = asymptotics(Model::tandem(), w);
  bool found = false;
  for (const auto& s : est.summands) {
    if (!s.contributing) continue;
    Integrand t = cancelPoles(s.term);
    REQUIRE(t.poleX + t.poleY == 1);
    Axis axis = t.poleX > 0 ? Axis::X : Axis::Y;
    Integrand red = residueReduce(t, axis, QuadraticNumber(1));
    Axis other = axis == Axis::X ? Axis::Y : Axis::X;
    Jet a = jetOfAmplitude(red, Complex(1.0), Complex(1.0), {other}, 2);
    CHECK(abs(a.at(0) - Complex(Real(Rational(49, 32)))) < Real(1e-28));
    found = true;
  }
  CHECK(found);
}
