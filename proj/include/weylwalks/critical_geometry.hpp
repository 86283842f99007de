#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weylwalks/model.hpp"
#include "weylwalks/quadratic.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

// Indices of the denominator factors H0 = 1 - tK, H1 = 1 - x, H2 = 1 - y that vanish.
class Stratum {
 public:
  Stratum() = default;
  explicit Stratum(unsigned mask) : mask_(mask) {}
  static Stratum of(std::initializer_list<int> k);
  bool contains(int k) const { return (mask_ >> k) & 1u; }
  unsigned mask() const { return mask_; }
  int size() const { return __builtin_popcount(mask_); }
  std::string name() const;  // e.g. "V0", "V01", "V012"
  friend bool operator==(const Stratum&, const Stratum&) = default;

 private:
  unsigned mask_ = 0;
};

enum class ConeStatus { Interior, Boundary, Outside, NotApplicable };
std::string coneStatusName(ConeStatus s);

struct ExactPoint {
  QuadraticNumber x, y, t;
};

struct CriticalPoint {
  Stratum stratum;
  std::optional<ExactPoint> exact;  // absent for the complex rotated points
  Complex x, y, t;
  bool isMinimal = false;
  bool isPositive = false;
  double height = 0;  // |xyt|^-1 = |P(x, y)|
  ConeStatus cone = ConeStatus::NotApplicable;
};

// All critical points of the strata V0, V01, V02, V012 (coincident points merged,
// the stratum then lists every vanishing factor). Stratum {1,2} is scanned and is empty.
std::vector<CriticalPoint> criticalPoints(const Model& model, const Weights& weights);
// Critical points on the stratum {1,2} (H1 = H2 = 0, H0 != 0) in direction (1,1,1).
std::vector<CriticalPoint> stratumTwelvePoints(const Model& model, const Weights& weights);

// |x| <= 1, |y| <= 1, |t| <= 1/(|xy| S(|1/x|, |1/y|)), not all strict.
bool isMinimal(const CriticalPoint& cp, const Model& model, const Weights& weights);
// Unique positive minimal point of least height; checked against the closed form.
CriticalPoint selectDominant(const std::vector<CriticalPoint>& points, const Model& model, const Weights& weights);
// Closed form of the dominant point for a regime.
ExactPoint dominantClosedForm(Regime regime, const Model& model, const Weights& weights);

struct NormalConeResult {
  std::vector<std::array<double, 3>> generators;
  std::vector<QuadraticNumber> coefficients;  // a_j with 1 = sum a_j v_j, in stratum order
  ConeStatus status = ConeStatus::NotApplicable;
};

NormalConeResult normalCone(const CriticalPoint& cp, const Model& model, const Weights& weights);
// True iff the smooth critical point equations of H0 hold at cp (P_x = P_y = 0).
bool coneBoundaryTest(const CriticalPoint& cp, const Model& model, const Weights& weights);

// Defining-equation residuals of the point on its stratum (absolute values).
std::vector<Real> stratumResiduals(const CriticalPoint& cp, const Model& model, const Weights& weights);

}  // namespace weylwalks
