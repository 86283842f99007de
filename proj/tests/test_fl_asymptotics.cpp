#include "doctest.h"
#include "weylwalks/errors.hpp"
#include "weylwalks/fl_asymptotics.hpp"
#include "weylwalks/walk_oracle.hpp"

using namespace weylwalks;

namespace {

constexpr int kOrder = 30;

Jet theta(int arity, int k) { return Jet::variable(arity, kOrder, k); }
Jet num(int arity, double v) { return Jet::constant(arity, kOrder, Complex(v)); }

}  // namespace

TEST_CASE("Gaussian golden case") {
  FLProblem p = FLProblem::make(num(1, 1), theta(1, 0) * theta(1, 0));
  FLExpansion e = flExpand(p, 4);
  CHECK(abs(e.C[0] - Complex(1.0)) < Real(1e-25));
  for (int j = 1; j <= 4; ++j) CHECK(abs(e.C[j]) < Real(1e-12));
  CHECK(e.jStar == 0);
  Real n(1000L);
  Real expect = sqrt(Real::pi() / n);
  CHECK(abs(e.prefactor(n) * e.C[0] - Complex(expect)) < expect * Real(1e-25));
}

TEST_CASE("first corrections of one-variable integrals") {
  Jet t = theta(1, 0);
  Jet half = num(1, 0.5);
  {
    // integral of t^2 exp(-n t^2 / 2) = sqrt(2 pi / n) / n
    FLExpansion e = flExpand(FLProblem::make(t * t, half * t * t), 4);
    CHECK(e.isZero(0, 1e-9));
    CHECK(e.jStar == 1);
    CHECK(abs(e.C[1] - Complex(1.0)) < Real(1e-25));
  }
  {
    // quartic phase correction: C_1 = -3c
    double c = 0.25;
    Jet phi = half * t * t + num(1, c) * t * t * t * t;
    FLExpansion e = flExpand(FLProblem::make(num(1, 1), phi), 4);
    CHECK(abs(e.C[1] - Complex(-3 * c)) < Real(1e-25));
  }
  {
    // An odd amplitude under an even phase integrates to zero at every order.
    FLExpansion e = flExpand(FLProblem::make(t, half * t * t), 4);
    for (int j = 0; j <= 4; ++j) CHECK(abs(e.C[j]) < Real(1e-25));
    CHECK(e.jStar == -1);
  }
}

TEST_CASE("two-variable Gaussian") {
  Jet x = theta(2, 0), y = theta(2, 1);
  FLProblem p = FLProblem::make(num(2, 1), x * x + x * y + y * y);
  CHECK(p.arity == 2);
  CHECK(abs(p.hessian[0] - Complex(2.0)) < Real(1e-30));
  CHECK(abs(p.hessian[1] - Complex(1.0)) < Real(1e-30));
  FLExpansion e = flExpand(p, 4);
  CHECK(abs(e.detInvSqrt - Complex(Real(1L) / sqrt(Real(3L)))) < Real(1e-28));
  CHECK(abs(e.C[0] - Complex(1.0)) < Real(1e-25));
  for (int j = 1; j <= 4; ++j) CHECK(abs(e.C[j]) < Real(1e-12));
  // Amplitude x^2: mean of x^2 under exp(-n Q) with H = [[2,1],[1,2]] is (H^-1)_00 / n = 2/(3n).
  FLExpansion m = flExpand(FLProblem::make(x * x, x * x + x * y + y * y), 4);
  CHECK(abs(m.C[1] - Complex(Real(2L) / Real(3L))) < Real(1e-25));
}

TEST_CASE("invalid phases are rejected") {
  Jet t = theta(1, 0);
  CHECK_THROWS(FLProblem::make(num(1, 1), t + t * t));
  CHECK_THROWS(FLProblem::make(num(1, 1), -(t * t)));
  CHECK_THROWS(FLProblem::make(num(1, 1), t * t * t));
  CHECK_THROWS(FLProblem::make(num(1, 1), num(1, 1) + t * t));
  CHECK_THROWS_AS(FLProblem::make(num(2, 1), t * t), InvalidArgument);
}

TEST_CASE("vanishing order bound") {
  CHECK(vanishingOrderBound(0) == 0);
  CHECK(vanishingOrderBound(1) == 1);
  CHECK(vanishingOrderBound(2) == 1);
  CHECK(vanishingOrderBound(3) == 2);
}

TEST_CASE("residue reduction and pole cancellation") {
  Integrand g = Integrand::fromGF(buildGF(Model::tandem(), Weights(4, 2)));
  Integrand r = residueReduce(g, Axis::X, QuadraticNumber(1));
  CHECK(r.fixedX);
  CHECK(r.poleX == 0);
  CHECK(r.numerator == g.numerator.substitute(Axis::X, 1));
  CHECK_THROWS_AS(residueReduce(r, Axis::X, QuadraticNumber(1)), InvalidArgument);
  CHECK_THROWS_AS(residueReduce(g, Axis::Y, QuadraticNumber(2)), InvalidArgument);
  Integrand noPole = g;
  noPole.poleY = 0;
  CHECK_THROWS_AS(residueReduce(noPole, Axis::Y, QuadraticNumber(1)), InvalidArgument);

  // (1 - x) in the numerator cancels against the pole.
  Integrand c;
  c.numerator = (Poly2(Rational(1)) - Poly2::x()) * Poly2::y();
  c.poleX = 1;
  Integrand cc = cancelPoles(c);
  CHECK(cc.poleX == 0);
  CHECK(cc.numerator == Poly2::y());
  Rational x(1, 3), y(2, 7);
  CHECK(cc.evaluate(x, y) == c.evaluate(x, y));
}

TEST_CASE("numerator split preserves the integrand") {
  Model T = Model::tandem();
  for (Weights w : {Weights(4, 2), Weights(2, 4), Weights(Rational(9, 4), Rational(3, 2))}) {
    Regime reg = classify(w, T);
    CriticalPoint d = selectDominant(criticalPoints(T, w), T, w);
    Integrand g = Integrand::fromGF(buildGF(T, w));
    auto parts = splitNumerator(g, d, reg, T, w);
    CHECK(parts.size() == 2);
    for (Rational x : {Rational(1, 3), Rational(5, 7)})
      for (Rational y : {Rational(2, 9), Rational(4, 3)}) {
        Rational sum(0);
        for (const auto& s : parts) sum += s.term.evaluate(x, y);
        CHECK(sum == g.evaluate(x, y));
      }
  }
  Weights w(3, 5);
  CriticalPoint d = selectDominant(criticalPoints(T, w), T, w);
  Integrand g = Integrand::fromGF(buildGF(T, w));
  auto parts = splitNumerator(g, d, Regime::Interior, T, w);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].term.numerator == g.numerator);
}

TEST_CASE("axial Tandem closed form") {
  Weights w(4, 2);
  AsymptoticEstimate e = asymptotics(Model::tandem(), w);
  CHECK(e.regime == Regime::AxialA);
  CHECK(e.rho == QuadraticNumber(5));
  CHECK(e.r == Rational(1, 2));
  Real a(4L);
  Real a32 = pow(a, Real(1.5));
  Real expect = (a * a * a - Real(2L) * a32 + Real(1L)) * sqrt(a32 + Real(2L)) / (sqrt(Real::pi()) * a * a * a);
  CHECK(abs(e.gamma - expect) < expect * Real(1e-25));
  CHECK(abs(e.gammaImag) < expect * Real(1e-20));
  // Only the y-part summand contributes.
  int contributing = 0;
  for (const auto& s : e.summands) contributing += s.contributing ? 1 : 0;
  CHECK(e.summands.size() == 2);
  CHECK(contributing == 1);

  AsymptoticOptions noSplit;
  noSplit.useSplit = false;
  AsymptoticEstimate f = asymptotics(Model::tandem(), w, noSplit);
  CHECK(abs(f.gamma - e.gamma) < expect * Real(1e-25));
  CHECK(f.r == e.r);
}

TEST_CASE("axial Double Tandem closed form") {
  Weights w(4, 2);
  AsymptoticEstimate e = asymptotics(Model::doubleTandem(), w);
  CHECK(e.rho == QuadraticNumber(Rational(37, 4)));
  CHECK(e.r == Rational(1, 2));
  Real a(4L), s = sqrt(a);
  Real expect = (pow(a, Real(3.5)) - Real(2L) * a * a + s) *
                sqrt(Real(2L) * a * a + (a * a + Real(1L)) * s + Real(2L) * a) /
                (sqrt(Real::pi()) * pow(a, 4L) * sqrt(a + Real(1L)));
  CHECK(abs(e.gamma - expect) < expect * Real(1e-25));
}

TEST_CASE("half factor on the cone boundary") {
  for (Weights w : {Weights(Rational(1, 8), Rational(1)), Weights(Rational(1), Rational(1, 4))}) {
    AsymptoticEstimate h = asymptotics(Model::tandem(), w);
    CHECK(h.conjectured);
    CHECK(h.r == Rational(5, 2));
    AsymptoticOptions full;
    full.halfFactor = false;
    AsymptoticEstimate f = asymptotics(Model::tandem(), w, full);
    CHECK(abs(f.gamma - Real(2L) * h.gamma) < h.gamma * Real(1e-25));
    CHECK(f.conjectured);
  }
  AsymptoticEstimate b = asymptotics(Model::tandem(), Weights(1, 1));
  CHECK_FALSE(b.conjectured);
  CHECK(b.r == Rational(3, 2));
  // Motzkin asymptotic constant 3 sqrt(3) / (2 sqrt(pi)).
  Real motz = Real(3L) * sqrt(Real(3L)) / (Real(2L) * sqrt(Real::pi()));
  CHECK(abs(b.gamma - motz) < motz * Real(1e-25));
}

TEST_CASE("reluctant regime needs the third constant") {
  AsymptoticEstimate e = asymptotics(Model::tandem(), Weights(Rational(1, 2), Rational(1, 2)));
  CHECK(e.regime == Regime::Reluctant);
  CHECK(e.r == Rational(4));
  bool third = false;
  for (const auto& c : e.contributions)
    if (!c.isZero() && c.arity == 2) third = third || c.jStar == 3;
  CHECK(third);
  CHECK(e.periodic.size() == 2);
  for (const auto& p : e.periodic) CHECK(abs(abs(p.u) - Real(1L)) < Real(1e-25));
}

TEST_CASE("interior regime is a pure exponential") {
  Weights w(3, 5);
  AsymptoticEstimate e = asymptotics(Model::tandem(), w);
  CHECK(e.regime == Regime::Interior);
  CHECK(e.r == Rational(0));
  CHECK(e.rho == QuadraticNumber(Inventory(Model::tandem(), w).S().evaluate(Rational(1), Rational(1))));
  CHECK(e.gamma > Real(0L));
  // Corrections are exponentially smaller than the leading term.
  QSeries qs = qSeries(Model::tandem(), w, 240);
  Real e120 = abs(Real(qs.values[120]) / e.predict(120) - Real(1L));
  Real e240 = abs(Real(qs.values[240]) / e.predict(240) - Real(1L));
  CHECK(e240 < Real(1e-5));
  CHECK(e240 < e120 * Real(1e-2));
}
