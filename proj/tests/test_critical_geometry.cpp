#include <random>

#include "doctest.h"
#include "regime_samples.hpp"
#include "weylwalks/critical_geometry.hpp"
#include "weylwalks/errors.hpp"

using namespace weylwalks;

TEST_CASE("stratum names") {
  CHECK(Stratum::of({0}).name() == "V0");
  CHECK(Stratum::of({0, 1}).name() == "V01");
  CHECK(Stratum::of({0, 1, 2}).name() == "V012");
  CHECK(Stratum::of({0, 2}).size() == 2);
  CHECK(stratumTwelvePoints(Model::tandem(), Weights(1, 1)).empty());
}

TEST_CASE("critical points satisfy their stratum equations") {
  std::mt19937 rng(17);
  for (auto m : {Model::tandem(), Model::doubleTandem()})
    for (Regime r : kAllRegimes)
      for (const Weights& w : samples::forRegime(r, 5, rng)) {
        auto pts = criticalPoints(m, w);
        CHECK(pts.size() >= 5);
        for (const auto& cp : pts)
          for (const Real& res : stratumResiduals(cp, m, w)) CHECK(res < Real(1e-12));
      }
}

TEST_CASE("dominant point equals the closed form in every regime") {
  std::mt19937 rng(19);
  for (auto m : {Model::tandem(), Model::doubleTandem()})
    for (Regime r : kAllRegimes)
      for (const Weights& w : samples::forRegime(r, 8, rng)) {
        CriticalPoint d = selectDominant(criticalPoints(m, w), m, w);
        ExactPoint e = dominantClosedForm(r, m, w);
        CHECK(d.exact->x == e.x);
        CHECK(d.exact->y == e.y);
        CHECK(d.exact->t == e.t);
        CHECK(d.isMinimal);
        CHECK(d.isPositive);
        // The dominant height is the exponential growth.
        CHECK(Inventory(m, w).P().evaluate(d.exact->x, d.exact->y) == exponentialGrowth(r, w, m));
      }
}

TEST_CASE("rotated smooth points are minimal only for Tandem") {
  Weights w(Rational(1, 2), Rational(1, 3));
  int tandemRot = 0, dtRot = 0;
  for (const auto& cp : criticalPoints(Model::tandem(), w))
    if (!cp.exact && cp.isMinimal) ++tandemRot;
  for (const auto& cp : criticalPoints(Model::doubleTandem(), w))
    if (!cp.exact && cp.isMinimal) ++dtRot;
  CHECK(tandemRot == 2);
  CHECK(dtRot == 0);
}

TEST_CASE("normal cone status") {
  auto T = Model::tandem();
  auto status = [&](const Weights& w) { return selectDominant(criticalPoints(T, w), T, w); };
  {
    Weights w(3, 5);
    CriticalPoint d = status(w);
    CHECK(d.stratum.name() == "V012");
    CHECK(normalCone(d, T, w).status == ConeStatus::Interior);
  }
  {
    Weights w(Rational(1, 8), Rational(1));
    CriticalPoint d = status(w);
    CHECK(normalCone(d, T, w).status == ConeStatus::Boundary);
    CHECK(coneBoundaryTest(d, T, w));
  }
  {
    Weights w(Rational(1), Rational(1, 4));
    CriticalPoint d = status(w);
    CHECK(normalCone(d, T, w).status == ConeStatus::Boundary);
    CHECK(coneBoundaryTest(d, T, w));
  }
  {
    // Axial: on the facet by the drift, yet P_x != 0 at (1, 1).
    Weights w(4, 2);
    CriticalPoint d = status(w);
    CHECK(normalCone(d, T, w).status == ConeStatus::Boundary);
    CHECK_FALSE(coneBoundaryTest(d, T, w));
  }
  {
    Weights w(4, 1);
    CriticalPoint d = status(w);
    CHECK(normalCone(d, T, w).status == ConeStatus::Interior);
    CHECK_FALSE(coneBoundaryTest(d, T, w));
  }
}

TEST_CASE("cone boundary exactly on the unit edges below 1") {
  std::mt19937 rng(23);
  for (auto m : {Model::tandem(), Model::doubleTandem()})
    for (Regime r : {Regime::BoundaryA, Regime::BoundaryB, Regime::Balanced, Regime::DirectionalA,
                     Regime::DirectionalB, Regime::Interior})
      for (const Weights& w : samples::forRegime(r, 4, rng)) {
        CriticalPoint d = selectDominant(criticalPoints(m, w), m, w);
        bool onEdge = w.a() <= 1 && w.b() <= 1 && (w.a() == 1 || w.b() == 1);
        CHECK(coneBoundaryTest(d, m, w) == onEdge);
      }
}
