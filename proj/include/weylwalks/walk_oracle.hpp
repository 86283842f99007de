#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "weylwalks/model.hpp"
#include "weylwalks/quadratic.hpp"
#include "weylwalks/rational.hpp"

namespace weylwalks {

struct OracleConfig {
  std::size_t maxLength = 10000;
  // Upper bound on the count storage; larger requests raise ResourceError.
  std::size_t maxBytes = std::size_t(4) << 30;
};

// Unweighted walk counts from the origin to each endpoint after n steps.
struct CountTable {
  std::size_t n = 0;
  std::map<std::pair<int, int>, Integer> counts;

  Integer at(int i, int j) const;
  Integer total() const;
};

struct QSeries {
  Model model;
  Weights weights;
  std::vector<Rational> values;  // q(0..N)
};

using QSamples = std::map<std::size_t, Rational>;

// Read-only view of one DP layer; cell(i, j) holds `limbs` little-endian limbs.
class LayerView {
 public:
  LayerView(std::size_t n, std::size_t limbs, const std::function<const mp_limb_t*(int, int)>& cell, bool tandem)
      : n_(n), limbs_(limbs), cell_(cell), tandem_(tandem) {}
  std::size_t length() const { return n_; }
  std::size_t limbs() const { return limbs_; }
  const mp_limb_t* cell(int i, int j) const { return cell_(i, j); }
  // Cells that can be nonzero on this layer.
  bool inSupport(int i, int j) const;
  Integer count(int i, int j) const;

 private:
  std::size_t n_, limbs_;
  std::function<const mp_limb_t*(int, int)> cell_;
  bool tandem_;
};

// Runs the count recurrence up to max(lengths) and calls `visit` on each requested layer.
void runCountDP(const Model& model, const std::vector<std::size_t>& lengths,
                const std::function<void(const LayerView&)>& visit, const OracleConfig& config = {});

// q(n) = sum counts(i,j) a^i b^j for one layer and several weight pairs.
std::vector<Rational> weightedTotals(const LayerView& layer, const std::vector<Weights>& weights);

CountTable countEndpoints(const Model& model, std::size_t n, const OracleConfig& config = {});
QSeries qSeries(const Model& model, const Weights& weights, std::size_t N, const OracleConfig& config = {});
// One DP pass serving every weight pair at the requested lengths.
std::vector<QSamples> sampleQ(const Model& model, const std::vector<Weights>& weights,
                              const std::vector<std::size_t>& lengths, const OracleConfig& config = {});

struct GrowthFit {
  double rhoHat = 0;
  double rHat = 0;
  std::size_t N = 0;
  std::size_t m = 0;
  std::size_t period = 1;
};

// Lengths needed by fitGrowth at top length N: N - period, N, m, 2m.
std::vector<std::size_t> fitLengths(std::size_t N, std::size_t period = 1);
// rhoHat = (q(N)/q(N-p))^(1/p); rHat = -log2(q(2m)/(q(m) rho^m)) with m the largest
// multiple of p not above N/2. Period p > 1 handles oscillating sequences.
GrowthFit fitGrowth(const QSamples& q, const QuadraticNumber& rho, std::size_t period = 1, std::size_t n0 = 512);
GrowthFit fitGrowth(const QSeries& qs, const QuadraticNumber& rho, std::size_t period = 1, std::size_t n0 = 512);

}  // namespace weylwalks
