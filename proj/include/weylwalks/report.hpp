#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylwalks/fl_asymptotics.hpp"
#include "weylwalks/model.hpp"
#include "weylwalks/walk_oracle.hpp"

namespace weylwalks {

// %g-style decimal rendering with `digits` significant digits.
std::string decimal(const Real& x, int digits = 30);
std::string decimal(const Rational& q, int digits = 30);

struct ValidationSample {
  std::size_t n = 0;
  std::string q;          // exact, "p/q"
  std::string predicted;  // decimal
  std::string relativeError;
  friend bool operator==(const ValidationSample&, const ValidationSample&) = default;
};

struct PeriodicRecord {
  std::string cRe, cIm, uRe, uIm;
  friend bool operator==(const PeriodicRecord&, const PeriodicRecord&) = default;
};

struct FitRecord {
  std::string rhoHat, rHat;
  std::size_t N = 0, m = 0, period = 1;
  friend bool operator==(const FitRecord&, const FitRecord&) = default;
};

// Every numeric field is a decimal string, so the report survives a JSON round trip unchanged.
struct ValidationReport {
  std::string model, a, b, regime;
  bool conjectured = false;
  std::string gamma, rhoExact, rhoFloat, r;
  std::vector<PeriodicRecord> periodic;
  std::vector<ValidationSample> samples;
  std::optional<FitRecord> fit;
  std::string bound;
  bool monotone = false;
  bool passed = false;
  std::string oracleSeconds, pipelineSeconds;

  std::string toJson(int indent = 2) const;
  static ValidationReport fromJson(const std::string& text);
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

struct ValidationConfig {
  std::vector<std::size_t> lengths{250, 500, 1000, 2000};
  double bound = 0.02;
  OracleConfig oracle;
  AsymptoticOptions options;
};

// Runs oracle and pipeline; passes iff the relative errors strictly decrease and the last is below the bound.
ValidationReport runValidation(const Model& model, const Weights& weights, const ValidationConfig& config = {});
// Prediction recomputed from the stored decimal fields of a report.
Real recomputePrediction(const ValidationReport& report, std::size_t n);

std::string estimateJson(const AsymptoticEstimate& est, int indent = 2);
std::string estimateText(const AsymptoticEstimate& est);

struct SweepRow {
  Rational a, b;
  Regime regime;
  QuadraticNumber rho;
  std::optional<Rational> r;
};

// Grid a_k = lo + (hi - lo) k / W, k = 1..W (likewise b with H), sorted by a then b.
// r depends only on the regime and is computed once per regime.
std::vector<SweepRow> sweep(const Model& model, std::size_t W, std::size_t H, const Rational& lo, const Rational& hi,
                            const AsymptoticOptions& options = {});
std::string sweepCsv(const std::vector<SweepRow>& rows);

}  // namespace weylwalks
