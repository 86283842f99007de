#include "weylwalks/critical_geometry.hpp"

#include <algorithm>

#include "weylwalks/errors.hpp"

namespace weylwalks {

namespace {

QuadraticNumber absq(const QuadraticNumber& v) { return v.sign() < 0 ? -v : v; }

Complex toComplex(const QuadraticNumber& v) { return Complex(v.toReal()); }

Complex cubeRoot(int k) {
  Real angle = Real::pi() * Real(2L * k) / Real(3L);
  return Complex::polar(Real(1L), angle);
}

Real tolerance() { return pow(Real(2L), -static_cast<long>(workingPrecision()) + 16); }

CriticalPoint exactPoint(const Inventory& inv, const QuadraticNumber& x, const QuadraticNumber& y) {
  CriticalPoint cp;
  QuadraticNumber k = inv.K().evaluate(x, y);
  if (k.sign() == 0) throw DegenerateError("critical point with K(x,y) = 0");
  cp.exact = ExactPoint{x, y, QuadraticNumber(1) / k};
  cp.x = toComplex(x);
  cp.y = toComplex(y);
  cp.t = toComplex(cp.exact->t);
  unsigned mask = 1u;
  if (x == QuadraticNumber(1)) mask |= 2u;
  if (y == QuadraticNumber(1)) mask |= 4u;
  cp.stratum = Stratum(mask);
  return cp;
}

CriticalPoint complexPoint(const Inventory& inv, const Complex& x, const Complex& y) {
  CriticalPoint cp;
  cp.x = x;
  cp.y = y;
  cp.t = Complex(1.0) / inv.K().evaluate(x, y);
  cp.stratum = Stratum(1u);
  return cp;
}

void annotate(CriticalPoint& cp, const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  cp.isMinimal = isMinimal(cp, model, weights);
  if (cp.exact) {
    cp.isPositive = cp.exact->x.sign() > 0 && cp.exact->y.sign() > 0 && cp.exact->t.sign() > 0;
    cp.height = absq(inv.P().evaluate(cp.exact->x, cp.exact->y)).toDouble();
  } else {
    cp.isPositive = false;
    cp.height = abs(inv.P().evaluate(cp.x, cp.y)).toDouble();
  }
  cp.cone = (cp.isMinimal && cp.stratum.size() >= 2) ? normalCone(cp, model, weights).status
                                                     : ConeStatus::NotApplicable;
}

}  // namespace

Stratum Stratum::of(std::initializer_list<int> k) {
  unsigned m = 0;
  for (int i : k) m |= 1u << i;
  return Stratum(m);
}

std::string Stratum::name() const {
  std::string s = "V";
  for (int k = 0; k < 3; ++k)
    if (contains(k)) s += static_cast<char>('0' + k);
  return s;
}

std::string coneStatusName(ConeStatus s) {
  switch (s) {
    case ConeStatus::Interior: return "Interior";
    case ConeStatus::Boundary: return "Boundary";
    case ConeStatus::Outside: return "Outside";
    case ConeStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::vector<CriticalPoint> criticalPoints(const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  QuadraticNumber a(weights.a()), b(weights.b());
  QuadraticNumber ra = QuadraticNumber::sqrtOf(weights.a()), rb = QuadraticNumber::sqrtOf(weights.b());
  QuadraticNumber one(1);

  std::vector<std::pair<QuadraticNumber, QuadraticNumber>> real;
  real.push_back({a, b});
  if (model.kind() == ModelKind::DoubleTandem) {
    real.push_back({-a, -b});
    real.push_back({a, -b});
    real.push_back({-a, b});
  }
  real.push_back({one, b / ra});
  real.push_back({one, -b / ra});
  real.push_back({a / rb, one});
  real.push_back({-a / rb, one});
  real.push_back({one, one});

  std::vector<CriticalPoint> out;
  for (const auto& [x, y] : real) {
    bool dup = false;
    for (const auto& cp : out)
      if (cp.exact->x == x && cp.exact->y == y) dup = true;
    if (!dup) out.push_back(exactPoint(inv, x, y));
  }
  // Rotated smooth points (x, y) = (a w, b w^2), w a primitive cube root of unity.
  Complex ca(weights.aFloat()), cb(weights.bFloat());
  for (int k = 1; k <= 2; ++k) out.push_back(complexPoint(inv, ca * cubeRoot(k), cb * cubeRoot(2 * k)));
  for (auto& cp : out) annotate(cp, model, weights);
  return out;
}

std::vector<CriticalPoint> stratumTwelvePoints(const Model&, const Weights&) {
  // On H1 = H2 = 0 the log-gradients are e1 and e2; (1,1,1) is never in their span
  // because of the t coordinate, so the stratum carries no critical points.
  const int e1[3] = {1, 0, 0}, e2[3] = {0, 1, 0}, dir[3] = {1, 1, 1};
  int det = e1[0] * (e2[1] * dir[2] - e2[2] * dir[1]) - e1[1] * (e2[0] * dir[2] - e2[2] * dir[0]) +
            e1[2] * (e2[0] * dir[1] - e2[1] * dir[0]);
  if (det == 0) throw InconsistencyError("stratum {1,2} unexpectedly admits critical points");
  return {};
}

bool isMinimal(const CriticalPoint& cp, const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  if (cp.exact) {
    QuadraticNumber ax = absq(cp.exact->x), ay = absq(cp.exact->y);
    if (ax > QuadraticNumber(1) || ay > QuadraticNumber(1)) return false;
    // |t| = 1/(|xy| |P(x,y)|), so the t-bound reads |P(x,y)| >= P(|x|,|y|), forcing equality.
    return absq(inv.P().evaluate(cp.exact->x, cp.exact->y)) == inv.P().evaluate(ax, ay);
  }
  Real tol = tolerance();
  Real ax = abs(cp.x), ay = abs(cp.y);
  if (ax > Real(1L) + tol || ay > Real(1L) + tol) return false;
  Real lhs = abs(inv.P().evaluate(cp.x, cp.y));
  Real rhs = inv.P().evaluate(ax, ay);
  return abs(lhs - rhs) <= tol * rhs;
}

ExactPoint dominantClosedForm(Regime regime, const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  const Rational& a = weights.a();
  const Rational& b = weights.b();
  QuadraticNumber ra = QuadraticNumber::sqrtOf(a), rb = QuadraticNumber::sqrtOf(b);
  QuadraticNumber one(1);
  bool tandem = model.kind() == ModelKind::Tandem;
  auto viaKernel = [&](const QuadraticNumber& x, const QuadraticNumber& y) {
    return ExactPoint{x, y, one / inv.K().evaluate(x, y)};
  };
  switch (regime) {
    case Regime::Interior:
      if (tandem) return ExactPoint{one, one, one / QuadraticNumber(a + b / a + 1 / b)};
      return viaKernel(one, one);
    case Regime::AxialA:
    case Regime::DirectionalA: {
      QuadraticNumber y = QuadraticNumber(b) / ra;
      if (tandem && a * a * a != 4) {
        QuadraticNumber a52 = QuadraticNumber(a * a) * ra;
        return ExactPoint{one, y, (a52 - QuadraticNumber(2 * a)) / QuadraticNumber(b * (a * a * a - 4))};
      }
      return viaKernel(one, y);
    }
    case Regime::AxialB:
    case Regime::DirectionalB: {
      QuadraticNumber x = QuadraticNumber(a) / rb;
      if (tandem && 4 * b * b * b != 1) {
        QuadraticNumber b32 = QuadraticNumber(b) * rb;
        return ExactPoint{x, one, (QuadraticNumber(2 * b * b * b) - b32) / QuadraticNumber(4 * a * b * b * b - a)};
      }
      return viaKernel(x, one);
    }
    case Regime::Balanced:
    case Regime::BoundaryA:
    case Regime::BoundaryB:
    case Regime::Reluctant:
      if (tandem) return ExactPoint{QuadraticNumber(a), QuadraticNumber(b), QuadraticNumber(1 / (3 * a * b))};
      return viaKernel(QuadraticNumber(a), QuadraticNumber(b));
  }
  throw UnhandledRegimeError("no closed form for regime");
}

CriticalPoint selectDominant(const std::vector<CriticalPoint>& points, const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  const CriticalPoint* best = nullptr;
  QuadraticNumber bestHeight;
  bool tie = false;
  for (const auto& cp : points) {
    if (!cp.isPositive || !cp.isMinimal || !cp.exact) continue;
    QuadraticNumber h = inv.P().evaluate(cp.exact->x, cp.exact->y);
    if (!best || h < bestHeight) {
      best = &cp;
      bestHeight = h;
      tie = false;
    } else if (h == bestHeight) {
      tie = true;
    }
  }
  if (!best) throw InconsistencyError("no positive minimal critical point");
  if (tie) throw InconsistencyError("positive minimal critical point of least height is not unique");
  ExactPoint expected = dominantClosedForm(classify(weights, model), model, weights);
  if (expected.x != best->exact->x || expected.y != best->exact->y || expected.t != best->exact->t)
    throw InconsistencyError("dominant point (" + best->exact->x.toString() + ", " + best->exact->y.toString() +
                             ") disagrees with the closed form (" + expected.x.toString() + ", " +
                             expected.y.toString() + ")");
  return *best;
}

NormalConeResult normalCone(const CriticalPoint& cp, const Model& model, const Weights& weights) {
  if (!cp.exact) throw InvalidArgument("normal cone needs an exact real point");
  Inventory inv(model, weights);
  const auto& [x, y, t] = *cp.exact;
  QuadraticNumber P = inv.P().evaluate(x, y);
  QuadraticNumber ax = -(x * inv.P().derivative(Axis::X).evaluate(x, y)) / P;
  QuadraticNumber ay = -(y * inv.P().derivative(Axis::Y).evaluate(x, y)) / P;

  NormalConeResult r;
  // log-gradient of H0 normalized to t-coordinate 1; H1, H2 give the unit vectors.
  r.generators.push_back({(QuadraticNumber(1) - ax).toDouble(), (QuadraticNumber(1) - ay).toDouble(), 1.0});
  r.coefficients.push_back(QuadraticNumber(1));
  if (cp.stratum.contains(1)) {
    r.generators.push_back({1.0, 0.0, 0.0});
    r.coefficients.push_back(ax);
  }
  if (cp.stratum.contains(2)) {
    r.generators.push_back({0.0, 1.0, 0.0});
    r.coefficients.push_back(ay);
  }
  // Components without a generator must already match.
  if ((!cp.stratum.contains(1) && ax.sign() != 0) || (!cp.stratum.contains(2) && ay.sign() != 0)) {
    r.status = ConeStatus::Outside;
    return r;
  }
  bool zero = false, negative = false;
  for (const auto& c : r.coefficients) {
    if (c.sign() == 0) zero = true;
    if (c.sign() < 0) negative = true;
  }
  r.status = negative ? ConeStatus::Outside : zero ? ConeStatus::Boundary : ConeStatus::Interior;
  return r;
}

bool coneBoundaryTest(const CriticalPoint& cp, const Model& model, const Weights& weights) {
  if (!cp.exact) throw InvalidArgument("cone boundary test needs an exact point");
  QuadraticNumber one(1);
  if (cp.exact->x != one && cp.exact->y != one) throw InvalidArgument("cone boundary test needs a coordinate equal to 1");
  Inventory inv(model, weights);
  return inv.P().derivative(Axis::X).evaluate(cp.exact->x, cp.exact->y).sign() == 0 &&
         inv.P().derivative(Axis::Y).evaluate(cp.exact->x, cp.exact->y).sign() == 0;
}

std::vector<Real> stratumResiduals(const CriticalPoint& cp, const Model& model, const Weights& weights) {
  Inventory inv(model, weights);
  const Poly2& K = inv.K();
  Complex one(1.0);
  Complex k = K.evaluate(cp.x, cp.y);
  Complex kx = K.derivative(Axis::X).evaluate(cp.x, cp.y);
  Complex ky = K.derivative(Axis::Y).evaluate(cp.x, cp.y);
  std::vector<Real> res;
  res.push_back(abs(one - cp.t * k));  // H0
  // x H_x = t H_t and y H_y = t H_t for the free coordinates.
  if (cp.stratum.contains(1)) res.push_back(abs(one - cp.x));
  else res.push_back(abs(cp.t * (cp.x * kx - k)));
  if (cp.stratum.contains(2)) res.push_back(abs(one - cp.y));
  else res.push_back(abs(cp.t * (cp.y * ky - k)));
  return res;
}

}  // namespace weylwalks
