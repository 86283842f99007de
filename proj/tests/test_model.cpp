#include <random>

#include "doctest.h"
#include "weylwalks/errors.hpp"
#include "weylwalks/model.hpp"

using namespace weylwalks;

namespace {
Weights W(const char* a, const char* b) { return Weights::parse(a, b); }
}  // namespace

TEST_CASE("model parsing and steps") {
  CHECK(Model::parse("tandem").kind() == ModelKind::Tandem);
  CHECK(Model::parse("Double-Tandem").kind() == ModelKind::DoubleTandem);
  CHECK(Model::parse("dt").name() == "double-tandem");
  CHECK_THROWS_AS(Model::parse("gessel"), ParseError);
  CHECK(Model::tandem().steps().size() == 3);
  CHECK(Model::doubleTandem().steps().size() == 6);
  // Double Tandem is closed under negation.
  Model dt = Model::doubleTandem();
  for (const auto& s : dt.steps()) {
    Step neg{-s.dx, -s.dy};
    bool found = false;
    for (const auto& t : dt.steps()) found = found || t == neg;
    CHECK(found);
  }
}

TEST_CASE("weights must be positive fractions") {
  CHECK_THROWS_AS(W("0", "1"), ParseError);
  CHECK_THROWS_AS(W("-1/2", "1"), ParseError);
  CHECK_THROWS_AS(W("1/2", "z"), ParseError);
  CHECK_THROWS_AS(Weights(Rational(0), Rational(1)), InvalidArgument);
  CHECK(W("2/4", "3").a() == Rational(1, 2));
}

TEST_CASE("inventory, height kernel and kernel polynomial") {
  for (auto m : {Model::tandem(), Model::doubleTandem()}) {
    Inventory inv(m, W("3/2", "5/7"));
    Poly2 xy = Poly2::x() * Poly2::y();
    CHECK(inv.K() == xy * inv.P());
    for (const auto& [e, c] : inv.K().terms()) {
      CHECK(e.first >= 0);
      CHECK(e.second >= 0);
    }
    Rational x(2, 3), y(5, 4);
    CHECK(inv.P().evaluate<Rational>(x, y) == inv.S().evaluate<Rational>(1 / x, 1 / y));
  }
  Inventory t(Model::tandem(), W("4", "2"));
  CHECK(t.S().evaluate<Rational>(Rational(1), Rational(1)) == Rational(5));
  Inventory d(Model::doubleTandem(), W("4", "2"));
  CHECK(d.S().evaluate<Rational>(Rational(1), Rational(1)) == Rational(37, 4));
}

TEST_CASE("regime classification") {
  auto T = Model::tandem();
  CHECK(classify(W("2", "3"), T) == Regime::Interior);
  CHECK(classify(W("1", "1"), T) == Regime::Balanced);
  CHECK(classify(W("4", "2"), T) == Regime::AxialA);
  CHECK(classify(W("2", "4"), T) == Regime::AxialB);
  CHECK(classify(W("4", "1"), T) == Regime::DirectionalA);
  CHECK(classify(W("1/2", "3"), T) == Regime::DirectionalB);
  CHECK(classify(W("1/8", "1"), T) == Regime::BoundaryA);
  CHECK(classify(W("1", "1/4"), T) == Regime::BoundaryB);
  CHECK(classify(W("1/2", "1/2"), T) == Regime::Reluctant);
  CHECK(regimeName(Regime::BoundaryA) == "BoundaryA*");
  CHECK(isConjectured(Regime::BoundaryB));
  CHECK_FALSE(isConjectured(Regime::Balanced));
  for (Regime r : kAllRegimes) CHECK(parseRegime(regimeName(r)) == r);
}

TEST_CASE("growth rates at known points") {
  auto T = Model::tandem(), D = Model::doubleTandem();
  CHECK(exponentialGrowth(Regime::AxialA, W("4", "2"), T) == QuadraticNumber(5));
  CHECK(exponentialGrowth(Regime::AxialA, W("4", "2"), D) == QuadraticNumber(Rational(37, 4)));
  CHECK(exponentialGrowth(Regime::Balanced, W("1", "1"), T) == QuadraticNumber(3));
  CHECK(exponentialGrowth(Regime::Balanced, W("1", "1"), D) == QuadraticNumber(6));
  // Interior growth is S(1,1).
  CHECK(exponentialGrowth(Regime::Interior, W("2", "3"), T) ==
        QuadraticNumber(Inventory(T, W("2", "3")).S().evaluate<Rational>(Rational(1), Rational(1))));
}

TEST_CASE("growth is continuous across regime boundaries") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(11, 60), den(1, 10);
  for (auto m : {Model::tandem(), Model::doubleTandem()}) {
    for (int k = 0; k < 40; ++k) {
      Rational t(num(rng), den(rng));
      t.canonicalize();
      if (t <= 1) continue;
      Weights axA(t * t, t), axB(t, t * t);
      CHECK(exponentialGrowth(Regime::DirectionalA, axA, m) == exponentialGrowth(Regime::Interior, axA, m));
      CHECK(exponentialGrowth(Regime::DirectionalB, axB, m) == exponentialGrowth(Regime::Interior, axB, m));
      Rational s = 1 / t;
      Weights onA(Rational(1), s), onB(s, Rational(1));
      CHECK(exponentialGrowth(Regime::DirectionalA, onA, m) == exponentialGrowth(Regime::Reluctant, onA, m));
      CHECK(exponentialGrowth(Regime::DirectionalB, onB, m) == exponentialGrowth(Regime::Reluctant, onB, m));
    }
  }
}
