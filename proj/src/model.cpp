#include "weylwalks/model.hpp"

#include <algorithm>
#include <cctype>

#include "weylwalks/errors.hpp"

namespace weylwalks {

Weights::Weights(const Rational& a, const Rational& b) : a_(a), b_(b) {
  a_.canonicalize();
  b_.canonicalize();
  if (a_ <= 0 || b_ <= 0) throw InvalidArgument("weights must be strictly positive");
}

Weights Weights::parse(const std::string& a, const std::string& b) {
  Rational qa = parseRational(a), qb = parseRational(b);
  if (qa <= 0 || qb <= 0) throw ParseError("weights must be strictly positive");
  return Weights(qa, qb);
}

std::string Weights::toString() const { return "(" + weylwalks::toString(a_) + ", " + weylwalks::toString(b_) + ")"; }

Model::Model(ModelKind kind) : kind_(kind) {
  steps_ = {{1, 0}, {-1, 1}, {0, -1}};
  if (kind == ModelKind::DoubleTandem) {
    steps_.push_back({-1, 0});
    steps_.push_back({1, -1});
    steps_.push_back({0, 1});
  }
}

Model Model::parse(const std::string& name) {
  std::string n;
  for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "tandem" || n == "t") return tandem();
  if (n == "double-tandem" || n == "doubletandem" || n == "double_tandem" || n == "dt") return doubleTandem();
  throw ParseError("unknown model '" + name + "' (expected tandem or double-tandem)");
}

std::string Model::name() const { return kind_ == ModelKind::Tandem ? "tandem" : "double-tandem"; }

Rational Model::stepWeight(const Step& s, const Weights& w) const {
  return powRational(w.a(), s.dx) * powRational(w.b(), s.dy);
}

Inventory::Inventory(const Model& model, const Weights& weights) : model_(model), weights_(weights) {
  for (const Step& s : model.steps()) {
    Rational w = model.stepWeight(s, weights);
    s_.add(s.dx, s.dy, w);
    p_.add(-s.dx, -s.dy, w);
    k_.add(1 - s.dx, 1 - s.dy, w);
  }
}

std::string regimeName(Regime r) {
  switch (r) {
    case Regime::Interior: return "Interior";
    case Regime::AxialA: return "AxialA";
    case Regime::AxialB: return "AxialB";
    case Regime::DirectionalA: return "DirectionalA";
    case Regime::DirectionalB: return "DirectionalB";
    case Regime::Balanced: return "Balanced";
    case Regime::BoundaryA: return "BoundaryA*";
    case Regime::BoundaryB: return "BoundaryB*";
    case Regime::Reluctant: return "Reluctant";
  }
  return "?";
}

Regime parseRegime(const std::string& name) {
  for (Regime r : kAllRegimes)
    if (regimeName(r) == name) return r;
  throw ParseError("unknown regime '" + name + "'");
}

bool isConjectured(Regime r) { return r == Regime::BoundaryA || r == Regime::BoundaryB; }

Regime classify(const Weights& weights, const Model&) {
  const Rational& a = weights.a();
  const Rational& b = weights.b();
  int ca = cmp(a, 1), cb = cmp(b, 1);
  if (ca < 0 && cb < 0) return Regime::Reluctant;
  if (ca < 0 && cb == 0) return Regime::BoundaryA;
  if (ca == 0 && cb < 0) return Regime::BoundaryB;
  if (ca == 0 && cb == 0) return Regime::Balanced;
  // At least one weight exceeds 1 and neither is on the unit lines from below.
  int bSqVsA = cmp(b * b, a);  // b vs sqrt(a)
  int aSqVsB = cmp(a * a, b);  // a vs sqrt(b)
  if (ca > 0 && bSqVsA < 0) return Regime::DirectionalA;
  if (ca > 0 && bSqVsA == 0) return Regime::AxialA;
  if (cb > 0 && aSqVsB < 0) return Regime::DirectionalB;
  if (cb > 0 && aSqVsB == 0) return Regime::AxialB;
  return Regime::Interior;
}

QuadraticNumber exponentialGrowth(Regime regime, const Weights& weights, const Model& model) {
  const Rational& a = weights.a();
  const Rational& b = weights.b();
  QuadraticNumber ra = QuadraticNumber::sqrtOf(a), rb = QuadraticNumber::sqrtOf(b);
  bool dt = model.kind() == ModelKind::DoubleTandem;
  switch (regime) {
    case Regime::Interior:
      if (dt) return QuadraticNumber(a + 1 / a + b / a + a / b + 1 / b + b);
      return QuadraticNumber(a + b / a + 1 / b);
    case Regime::AxialA:
    case Regime::DirectionalA:
      if (dt) return QuadraticNumber(a + 1 / a) + QuadraticNumber(2 * (a + 1)) / ra;
      return QuadraticNumber(a) + QuadraticNumber(2) / ra;
    case Regime::AxialB:
    case Regime::DirectionalB:
      if (dt) return QuadraticNumber(b + 1 / b) + QuadraticNumber(2 * (b + 1)) / rb;
      return QuadraticNumber(2) * rb + QuadraticNumber(1 / b);
    case Regime::Balanced:
    case Regime::BoundaryA:
    case Regime::BoundaryB:
    case Regime::Reluctant:
      return QuadraticNumber(dt ? 6 : 3);
  }
  throw UnhandledRegimeError("unknown regime");
}

}  // namespace weylwalks
