#pragma once

#include <string>
#include <vector>

#include "weylwalks/poly2.hpp"
#include "weylwalks/quadratic.hpp"
#include "weylwalks/rational.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

enum class ModelKind { Tandem, DoubleTandem };

struct Step {
  int dx;
  int dy;
  friend bool operator==(const Step&, const Step&) = default;
};

// Central weight pair; both entries strictly positive.
class Weights {
 public:
  Weights(const Rational& a, const Rational& b);
  static Weights parse(const std::string& a, const std::string& b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  // Correctly rounded at the working precision.
  Real aFloat() const { return Real(a_); }
  Real bFloat() const { return Real(b_); }
  std::string toString() const;

  friend bool operator==(const Weights& x, const Weights& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  Rational a_, b_;
};

class Model {
 public:
  static Model tandem() { return Model(ModelKind::Tandem); }
  static Model doubleTandem() { return Model(ModelKind::DoubleTandem); }
  // Accepts "tandem", "double-tandem" (also "doubletandem", "dt").
  static Model parse(const std::string& name);
  explicit Model(ModelKind kind);

  ModelKind kind() const { return kind_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::string name() const;
  // a^dx * b^dy
  Rational stepWeight(const Step& s, const Weights& w) const;

  friend bool operator==(const Model& x, const Model& y) { return x.kind_ == y.kind_; }

 private:
  ModelKind kind_;
  std::vector<Step> steps_;
};

// Weighted step inventory S(x,y) = sum w_s x^dx y^dy, and the height kernel
// P(x,y) = S(1/x,1/y) whose cross-multiple xy*P is the polynomial K in the
// kernel factor 1 - t*K(x,y).
class Inventory {
 public:
  Inventory(const Model& model, const Weights& weights);

  const Model& model() const { return model_; }
  const Weights& weights() const { return weights_; }
  const Poly2& S() const { return s_; }
  const Poly2& P() const { return p_; }
  const Poly2& K() const { return k_; }

  template <class T>
  T evaluate(const T& x, const T& y) const {
    return s_.evaluate(x, y);
  }

 private:
  Model model_;
  Weights weights_;
  Poly2 s_, p_, k_;
};

enum class Regime {
  Interior,
  AxialA,
  AxialB,
  DirectionalA,
  DirectionalB,
  Balanced,
  BoundaryA,
  BoundaryB,
  Reluctant,
};

inline constexpr Regime kAllRegimes[] = {Regime::Interior,     Regime::AxialA,    Regime::AxialB,
                                         Regime::DirectionalA, Regime::DirectionalB, Regime::Balanced,
                                         Regime::BoundaryA,    Regime::BoundaryB, Regime::Reluctant};

// "Interior", "AxialA", ..., "BoundaryA*", "BoundaryB*", "Reluctant".
std::string regimeName(Regime r);
Regime parseRegime(const std::string& name);
// True for the starred cases, whose estimate relies on the half-contribution conjecture.
bool isConjectured(Regime r);

Regime classify(const Weights& weights, const Model& model);
QuadraticNumber exponentialGrowth(Regime regime, const Weights& weights, const Model& model);

}  // namespace weylwalks
