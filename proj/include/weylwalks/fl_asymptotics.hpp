#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylwalks/critical_geometry.hpp"
#include "weylwalks/diagonal_gf.hpp"
#include "weylwalks/integrand.hpp"
#include "weylwalks/jet.hpp"
#include "weylwalks/model.hpp"
#include "weylwalks/quadratic.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

// Integral of A(theta) exp(-n phi(theta)) over a neighbourhood of theta = 0.
struct FLProblem {
  Jet amplitude;
  Jet phase;
  int arity = 0;
  std::vector<Complex> hessian;  // row-major arity x arity
  int order = 0;

  // Reads the Hessian off the phase and checks phi(0) = 0, grad phi(0) = 0,
  // a nonsingular Hessian and Re phi >= 0 near 0.
  static FLProblem make(Jet amplitude, Jet phase);
};

struct FLExpansion {
  int arity = 0;
  std::vector<Complex> C;       // C_0 .. C_J
  std::vector<Real> termScale;  // sum of |terms| entering each C_j
  int jStar = -1;               // first C_j above threshold at this precision, -1 if none
  Complex detInvSqrt;           // det(H)^{-1/2}, product of principal roots of the eigenvalues

  bool isZero(int j, double threshold) const;
  // (2 pi / n)^{arity/2} det(H)^{-1/2}
  Complex prefactor(const Real& n) const;
};

// C_j for j = 0..maxJ; needs jets of order at least 6 maxJ.
FLExpansion flExpand(const FLProblem& p, int maxJ, double zeroThreshold = 1e-9);

// First index worth scanning when the amplitude vanishes to order k.
int vanishingOrderBound(int k);

// Residue at coordinate 1 on the axis: drops the (1 - axis) pole and fixes the coordinate.
Integrand residueReduce(const Integrand& term, Axis axis, const QuadraticNumber& coordinate);
// Cancels (1 - axis) poles that divide the numerator.
Integrand cancelPoles(const Integrand& term);

struct SplitSummand {
  Integrand term;
  bool contributing = true;
};

// Axial regimes: the numerator factor vanishing at the dominant point is written as
// [f - f|_{u=1}] + f|_{u=1} on the axis u where P decreases; other regimes return the
// integrand unchanged. Contribution flags are filled in by asymptotics().
std::vector<SplitSummand> splitNumerator(const Integrand& term, const CriticalPoint& cp, Regime regime,
                                         const Model& model, const Weights& weights);

struct PeriodicTerm {
  Complex c;  // constant relative to rho^n n^-r
  Complex u;  // P(zc) / rho, |u| = 1
};

// One leaf of the residue tree.
struct Contribution {
  std::string path;
  QuadraticNumber x, y;  // leaf point (fixed coordinates are 1)
  QuadraticNumber height;
  Rational r;
  int arity = 0;
  int jStar = 0;
  Complex constant;
  std::vector<Complex> coefficients;
  std::vector<PeriodicTerm> periodic;
  std::size_t summand = 0;
  bool isZero() const { return constant.isZero(); }
};

struct AsymptoticOptions {
  bool halfFactor = true;
  bool useSplit = true;
  int initialJ = 4;
  int maxJ = 8;
  bool confirmAtDoublePrecision = true;
  double zeroThreshold = 1e-9;
};

struct AsymptoticEstimate {
  Model model = Model::tandem();
  Weights weights{1, 1};
  Regime regime = Regime::Balanced;
  QuadraticNumber rho;
  Real rhoFloat;
  Rational r;
  Real gamma;
  Real gammaImag;
  bool conjectured = false;
  ConeStatus cone = ConeStatus::NotApplicable;
  std::vector<PeriodicTerm> periodic;
  std::vector<Contribution> contributions;
  std::vector<SplitSummand> summands;

  // rho^n n^-r (gamma + Re sum c_k u_k^n)
  Real predict(std::size_t n) const;
  double rDouble() const { return r.get_d(); }
};

AsymptoticEstimate asymptotics(const Model& model, const Weights& weights, const AsymptoticOptions& options = {});

// The residue tree of one integrand, before aggregation.
std::vector<Contribution> analyzeTerm(const Integrand& term, const Model& model, const Weights& weights,
                                      const AsymptoticOptions& options = {});

}  // namespace weylwalks
