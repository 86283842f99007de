#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "weylwalks/errors.hpp"
#include "weylwalks/walk_oracle.hpp"

using namespace weylwalks;

TEST_CASE("unweighted Tandem totals are the Motzkin numbers") {
  QSeries qs = qSeries(Model::tandem(), Weights(1, 1), 12);
  const long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};
  for (int n = 0; n <= 12; ++n) CHECK(qs.values[n] == motzkin[n]);
}

TEST_CASE("Double Tandem small totals") {
  QSeries qs = qSeries(Model::doubleTandem(), Weights(1, 1), 4);
  CHECK(qs.values[0] == 1);
  CHECK(qs.values[1] == 2);
  CHECK(qs.values[2] == 8);
  CHECK(qs.values[3] == 32);
  CHECK(qs.values[4] == 144);
}

TEST_CASE("endpoint tables match depth-first enumeration") {
  for (auto m : {Model::tandem(), Model::doubleTandem()}) {
    int top = m.kind() == ModelKind::Tandem ? 10 : 8;
    for (int n = 0; n <= top; ++n) {
      auto expect = bf::endpoints(m, n);
      CountTable t = countEndpoints(m, n);
      std::size_t nonzero = 0;
      for (const auto& [ij, c] : t.counts)
        if (c != 0) ++nonzero;
      CHECK(nonzero == expect.size());
      for (const auto& [ij, c] : expect) CHECK(t.at(ij.first, ij.second) == c);
    }
  }
}

TEST_CASE("weighted totals match enumeration for random weights") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  for (auto m : {Model::tandem(), Model::doubleTandem()}) {
    std::vector<Weights> ws;
    for (int k = 0; k < 4; ++k) ws.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    auto samples = sampleQ(m, ws, {0, 3, 7});
    for (std::size_t k = 0; k < ws.size(); ++k) {
      QSeries qs = qSeries(m, ws[k], 7);
      for (int n : {0, 3, 7}) {
        CHECK(samples[k].at(n) == bf::weighted(m, ws[k], n));
        CHECK(qs.values[n] == samples[k].at(n));
      }
    }
  }
}

TEST_CASE("Tandem support lies on one residue class of i - j") {
  runCountDP(Model::tandem(), {5, 6, 7}, [](const LayerView& layer) {
    int n = static_cast<int>(layer.length());
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        if (!layer.inSupport(i, j)) CHECK(layer.count(i, j) == 0);
  });
}

TEST_CASE("resource caps") {
  OracleConfig c;
  c.maxLength = 20;
  CHECK_THROWS_AS(qSeries(Model::tandem(), Weights(1, 1), 21, c), ResourceError);
  OracleConfig small;
  small.maxBytes = 64;
  CHECK_THROWS_AS(qSeries(Model::doubleTandem(), Weights(1, 1), 200, small), ResourceError);
}

TEST_CASE("growth fit on synthetic sequences") {
  QSamples q;
  for (std::size_t n : fitLengths(2000)) q[n] = Rational(Integer(1) << n, Integer(n) * Integer(n));
  GrowthFit f = fitGrowth(q, QuadraticNumber(2));
  CHECK(f.rhoHat == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(f.rHat == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(f.m == 1000);
  std::vector<std::size_t> l3 = fitLengths(2000, 3);
  CHECK(std::find(l3.begin(), l3.end(), 999) != l3.end());
  CHECK(std::find(l3.begin(), l3.end(), 1998) != l3.end());
  CHECK(std::find(l3.begin(), l3.end(), 1997) != l3.end());
  QSamples shortRun{{10, 1}, {20, 1}};
  CHECK_THROWS_AS(fitGrowth(shortRun, QuadraticNumber(1)), InvalidArgument);
}
