#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "weylwalks/errors.hpp"
#include "weylwalks/report.hpp"

using namespace weylwalks;

TEST_CASE("decimal rendering") {
  CHECK(decimal(Rational(1, 2)) == "0.5");
  CHECK(decimal(Rational(5)) == "5");
  CHECK(decimal(Real(Rational(1, 3)), 5) == "0.33333");
}

TEST_CASE("estimate JSON carries the fixed keys") {
  AsymptoticEstimate e = asymptotics(Model::tandem(), Weights(4, 2));
  auto j = nlohmann::json::parse(estimateJson(e));
  for (const char* k : {"model", "a", "b", "regime", "rho_exact", "rho_float", "r", "gamma_float", "conjectured"})
    CHECK(j.contains(k));
  CHECK(j["r"] == "0.5");
  CHECK(j["rho_exact"] == "5");
  CHECK(j["regime"] == "AxialA");
  CHECK(j["conjectured"] == false);
  CHECK(estimateText(e).find("AxialA") != std::string::npos);
}

TEST_CASE("validation report round trip") {
  ValidationConfig cfg;
  cfg.lengths = {40, 80, 160};
  cfg.bound = 0.05;
  ValidationReport rep = runValidation(Model::tandem(), Weights(4, 2), cfg);
  REQUIRE(rep.samples.size() == 3);
  CHECK(rep.monotone);
  CHECK(rep.passed);
  CHECK_FALSE(rep.fit.has_value());
  ValidationReport back = ValidationReport::fromJson(rep.toJson());
  CHECK(back == rep);
  // Stored errors (20 significant digits) follow from the stored counts and estimate.
  for (const auto& s : back.samples) {
    Real q(parseRational(s.q));
    Real pred = recomputePrediction(back, s.n);
    Real err = abs(q - pred) / q;
    CHECK(abs(err - Real::fromString(s.relativeError)) < err * Real(1e-18));
  }
  auto j = nlohmann::json::parse(rep.toJson());
  for (const char* k : {"model", "a", "b", "regime", "conjectured", "gamma", "rho_exact", "rho_float", "r", "periodic",
                        "samples", "fit", "bound", "monotone", "passed", "timings"})
    CHECK(j.contains(k));
  CHECK(j["fit"].is_null());
  CHECK_THROWS_AS(ValidationReport::fromJson("{\"model\": 3}"), ParseError);
  CHECK_THROWS_AS(ValidationReport::fromJson("not json"), ParseError);
}

TEST_CASE("reluctant validation keeps the periodic terms") {
  ValidationConfig cfg;
  cfg.lengths = {60, 120};
  ValidationReport rep = runValidation(Model::tandem(), Weights(Rational(1, 2), Rational(1, 2)), cfg);
  CHECK(rep.periodic.size() == 2);
  CHECK(ValidationReport::fromJson(rep.toJson()) == rep);
}

TEST_CASE("small sweep") {
  auto rows = sweep(Model::tandem(), 4, 4, Rational(0), Rational(4));
  REQUIRE(rows.size() == 16);
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const SweepRow& u, const SweepRow& v) {
    return u.a < v.a || (u.a == v.a && u.b < v.b);
  }));
  auto find = [&](int a, int b) {
    return *std::find_if(rows.begin(), rows.end(), [&](const SweepRow& r) { return r.a == a && r.b == b; });
  };
  SweepRow one = find(1, 1);
  CHECK(one.regime == Regime::Balanced);
  CHECK(one.rho == QuadraticNumber(3));
  REQUIRE(one.r.has_value());
  CHECK(*one.r == Rational(3, 2));
  CHECK(find(2, 3).regime == Regime::Interior);
  CHECK(find(2, 3).r == Rational(0));
  CHECK(find(4, 2).regime == Regime::AxialA);
  CHECK(find(4, 2).r == Rational(1, 2));
  std::string csv = sweepCsv(rows);
  CHECK(csv.rfind("a,b,regime,rho,rho_exact,r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}
