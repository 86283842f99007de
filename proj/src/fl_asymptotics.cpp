#include "weylwalks/fl_asymptotics.hpp"

#include <algorithm>

#include "weylwalks/errors.hpp"

namespace weylwalks {

Integrand Integrand::fromGF(const FactoredRational& fr) {
  Integrand t;
  t.numerator = fr.numerator();
  t.scale = fr.scalar;
  t.monoX = t.monoY = 1;
  t.poleX = t.poleY = 1;
  return t;
}

namespace {

struct Point {
  QuadraticNumber x{1}, y{1};
  const QuadraticNumber& at(Axis a) const { return a == Axis::X ? x : y; }
};

Real twoPi() { return Real(2L) * Real::pi(); }

QuadraticNumber evalQ(const Poly2& p, const Point& z) { return p.evaluate<QuadraticNumber>(z.x, z.y); }

// Minimiser over u > 0 of c_{-1}/u + c_0 + c_1 u, the shape of P along one axis.
QuadraticNumber minimise1D(const Poly2& p, Axis u) {
  Rational lo(0), hi(0);
  for (const auto& [e, c] : p.terms()) {
    int k = u == Axis::X ? e.first : e.second;
    int other = u == Axis::X ? e.second : e.first;
    if (other != 0) throw InvalidArgument("restricted height kernel still depends on a fixed coordinate");
    if (k == -1) lo = c;
    else if (k == 1) hi = c;
    else if (k != 0) throw UnhandledRegimeError("height kernel of unexpected degree along an axis");
  }
  if (lo <= 0 || hi <= 0) throw DegenerateError("height kernel has no interior minimum along an axis");
  return QuadraticNumber::sqrtOf(lo / hi);
}

Poly2 restrictedP(const Poly2& P, const Integrand& t) {
  Poly2 p = P;
  if (t.fixedX) p = p.substitute(Axis::X, 1);
  if (t.fixedY) p = p.substitute(Axis::Y, 1);
  return p;
}

// Minimum of P over the positive torus radii allowed by the poles (coordinate <= 1 on a pole axis).
// P is convex in log coordinates, so the KKT point below is the global minimiser.
Point minimiser(const Poly2& P, const Integrand& t, const Weights& w) {
  QuadraticNumber one(1);
  Point z;
  if (!t.fixedX && t.fixedY) {
    z.x = minimise1D(P, Axis::X);
    if (t.poleX && z.x > one) z.x = one;
    return z;
  }
  if (t.fixedX && !t.fixedY) {
    z.y = minimise1D(P, Axis::Y);
    if (t.poleY && z.y > one) z.y = one;
    return z;
  }
  Poly2 Px = P.derivative(Axis::X), Py = P.derivative(Axis::Y);
  auto feasible = [&](const Point& p) { return (!t.poleX || p.x <= one) && (!t.poleY || p.y <= one); };
  Point c{w.a(), w.b()};
  if (evalQ(Px, c).sign() != 0 || evalQ(Py, c).sign() != 0)
    throw DegenerateError("(a, b) is not a critical point of the height kernel");
  if (feasible(c)) return c;
  if (t.poleX) {
    Point f{one, minimise1D(P.substitute(Axis::X, 1), Axis::Y)};
    if (feasible(f) && evalQ(Px, f).sign() <= 0) return f;
  }
  if (t.poleY) {
    Point f{minimise1D(P.substitute(Axis::Y, 1), Axis::X), one};
    if (feasible(f) && evalQ(Py, f).sign() <= 0) return f;
  }
  if (t.poleX && t.poleY) return Point{};
  throw DegenerateError("no admissible minimiser of the height kernel");
}

struct Context {
  const Model& model;
  const Weights& weights;
  const AsymptoticOptions& options;
  Poly2 P;
};

struct LeafExpansion {
  FLExpansion lo, hi;
};

FLExpansion expandAt(const Integrand& t, const Poly2& P, const Point& z, int k1, int k2,
                     const std::vector<Axis>& kept, int J) {
  Complex x0 = t.fixedX ? Complex(1.0) : Complex(z.x.toReal());
  Complex y0 = t.fixedY ? Complex(1.0) : Complex(z.y.toReal());
  if (k1) x0 = x0 * Complex::polar(Real(1L), twoPi() * Real(static_cast<long>(k1)) / Real(6L));
  if (k2) y0 = y0 * Complex::polar(Real(1L), twoPi() * Real(static_cast<long>(k2)) / Real(6L));
  int M = 6 * J;
  FLProblem p = FLProblem::make(jetOfAmplitude(t, x0, y0, kept, M), jetOfPhase(P, x0, y0, kept, M));
  return flExpand(p, J);
}

std::string pointString(const Point& z) { return "(" + z.x.toString() + ", " + z.y.toString() + ")"; }

void flLeaf(const Integrand& t, const Point& z, const Context& ctx, std::vector<Contribution>& out) {
  std::vector<Axis> kept;
  if (!t.fixedX) kept.push_back(Axis::X);
  if (!t.fixedY) kept.push_back(Axis::Y);
  int d = static_cast<int>(kept.size());
  const auto& opt = ctx.options;
  unsigned prec = workingPrecision();

  int J = std::max(1, opt.initialJ);
  int jStar = -1;
  FLExpansion lo;
  for (;;) {
    lo = expandAt(t, ctx.P, z, 0, 0, kept, J);
    if (opt.confirmAtDoublePrecision) {
      PrecisionScope scope(2 * prec);
      FLExpansion hi = expandAt(t, ctx.P, z, 0, 0, kept, J);
      for (int j = 0; j <= J && jStar < 0; ++j)
        if (abs(hi.C[j]) > Real(opt.zeroThreshold) * lo.termScale[j]) jStar = j;
    } else {
      for (int j = 0; j <= J && jStar < 0; ++j)
        if (!lo.isZero(j, opt.zeroThreshold)) jStar = j;
    }
    if (jStar >= 0) break;
    if (J >= opt.maxJ)
      throw OrderExhaustedError("all constants C_0..C_" + std::to_string(J) + " vanish at " + pointString(z));
    J = std::min(opt.maxJ, J + 2);
  }

  Real norm = pow(twoPi(), -static_cast<long>(d)) * pow(twoPi(), Real(d) / Real(2L));
  Contribution c;
  c.path = t.history + "FL" + std::to_string(d) + " at " + pointString(z);
  c.x = z.x;
  c.y = z.y;
  c.height = evalQ(ctx.P, z);
  c.arity = d;
  c.jStar = jStar;
  c.r = Rational(d, 2) + jStar;
  c.r.canonicalize();
  c.constant = lo.C[jStar] * lo.detInvSqrt * norm;
  c.coefficients = lo.C;

  if (d == 2) {
    Real h = c.height.toReal();
    Real tol = pow(Real(2L), -static_cast<long>(prec) + 20) * h;
    for (int k1 = 0; k1 < 6; ++k1)
      for (int k2 = 0; k2 < 6; ++k2) {
        if (k1 == 0 && k2 == 0) continue;
        Complex xc = Complex(z.x.toReal()) * Complex::polar(Real(1L), twoPi() * Real(static_cast<long>(k1)) / Real(6L));
        Complex yc = Complex(z.y.toReal()) * Complex::polar(Real(1L), twoPi() * Real(static_cast<long>(k2)) / Real(6L));
        Complex pc = ctx.P.evaluate<Complex>(xc, yc);
        if (abs(abs(pc) - h) > tol) continue;
        FLExpansion e = expandAt(t, ctx.P, z, k1, k2, kept, J);
        c.periodic.push_back({e.C[jStar] * e.detInvSqrt * norm, pc / Complex(h)});
      }
  }
  out.push_back(std::move(c));
}

void analyze(Integrand t, const Context& ctx, std::vector<Contribution>& out) {
  t = cancelPoles(t);
  if (t.freeCount() == 0) {
    if (t.poleX || t.poleY) throw InvalidArgument("pole left on a fixed coordinate");
    Rational v = t.weight * t.scale * t.numerator.evaluate<Rational>(Rational(1), Rational(1));
    Contribution c;
    c.path = t.history + "exact";
    c.x = c.y = QuadraticNumber(1);
    c.height = evalQ(ctx.P, Point{});
    c.r = 0;
    c.constant = Complex(Real(v));
    c.coefficients = {c.constant};
    out.push_back(std::move(c));
    return;
  }
  Poly2 P = restrictedP(ctx.P, t);
  Point z = minimiser(P, t, ctx.weights);

  std::vector<Axis> interior, boundary;
  for (Axis a : {Axis::X, Axis::Y}) {
    if (t.fixed(a) || t.pole(a) == 0 || z.at(a) != QuadraticNumber(1)) continue;
    int s = evalQ(P.derivative(a), z).sign();
    if (s < 0) interior.push_back(a);
    else if (s == 0) boundary.push_back(a);
    else throw InconsistencyError(std::string("height kernel increases across the ") + axisName(a) + " pole at " +
                                  pointString(z));
  }

  if (!interior.empty()) {
    analyze(residueReduce(t, interior.front(), 1), ctx, out);
    return;
  }
  if (!boundary.empty()) {
    // Half residue on each boundary pole; the principal-value remainder is dropped.
    unsigned n = static_cast<unsigned>(boundary.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Integrand u = t;
      bool vanishes = false;
      int taken = 0;
      for (unsigned k = 0; k < n; ++k) {
        if (!((mask >> k) & 1u)) continue;
        u = cancelPoles(u);
        if (u.pole(boundary[k]) == 0) {
          vanishes = true;
          break;
        }
        u = residueReduce(u, boundary[k], 1);
        ++taken;
      }
      if (vanishes) continue;
      u = cancelPoles(u);
      bool pv = false;
      for (unsigned k = 0; k < n; ++k)
        if (!((mask >> k) & 1u) && u.pole(boundary[k]) > 0) pv = true;
      if (pv) continue;
      if (ctx.options.halfFactor) u.weight /= Rational(1 << taken);
      u.history += "half; ";
      analyze(u, ctx, out);
    }
    return;
  }
  flLeaf(t, z, ctx, out);
}

}  // namespace

FLProblem FLProblem::make(Jet amplitude, Jet phase) {
  if (amplitude.arity() != phase.arity() || amplitude.order() != phase.order())
    throw InvalidArgument("amplitude and phase jets differ in shape");
  FLProblem p{std::move(amplitude), std::move(phase), 0, {}, 0};
  p.arity = p.phase.arity();
  p.order = p.phase.order();
  if (p.order < 2) throw InvalidArgument("phase jet needs order 2 or more");
  const Jet& f = p.phase;
  if (p.arity == 1) {
    p.hessian = {f.at(2) * Real(2L)};
  } else {
    p.hessian = {f.at(2, 0) * Real(2L), f.at(1, 1), f.at(1, 1), f.at(0, 2) * Real(2L)};
  }
  Real scale(0L);
  for (const auto& h : p.hessian) scale = std::max(scale, abs(h));
  Real tol = pow(Real(2L), -static_cast<long>(workingPrecision()) + 32) * std::max(scale, Real(1L));
  if (abs(f.at(0)) > tol) throw InconsistencyError("phase does not vanish at the expansion point");
  Real grad = p.arity == 1 ? abs(f.at(1)) : std::max(abs(f.at(1, 0)), abs(f.at(0, 1)));
  if (grad > tol) throw InconsistencyError("phase gradient is nonzero: not a critical point");
  Complex det = p.arity == 1 ? p.hessian[0] : p.hessian[0] * p.hessian[3] - p.hessian[1] * p.hessian[2];
  if (abs(det) <= Real(1e-12) * pow(scale, static_cast<long>(p.arity)) || scale.isZero())
    throw DegenerateError("singular Hessian");
  // Re phi >= 0 on a small circle around the origin.
  Jet low = f.withOrder(std::min(p.order, 6));
  Real eps(1e-3);
  for (int k = 0; k < 16; ++k) {
    Real ang = twoPi() * Real(static_cast<long>(k)) / Real(16L);
    std::vector<Complex> th;
    if (p.arity == 1) th = {Complex(k % 2 ? -eps : eps)};
    else th = {Complex(eps * cos(ang)), Complex(eps * sin(ang))};
    if (low.evaluate(th).re < -Real(1e-12) * eps * eps * scale) throw InconsistencyError("Re phi < 0 near the point");
  }
  return p;
}

bool FLExpansion::isZero(int j, double threshold) const {
  return abs(C.at(j)) <= Real(threshold) * termScale.at(j);
}

Complex FLExpansion::prefactor(const Real& n) const {
  return detInvSqrt * pow(twoPi() / n, Real(arity) / Real(2L));
}

FLExpansion flExpand(const FLProblem& p, int maxJ, double zeroThreshold) {
  if (maxJ < 0) throw InvalidArgument("negative expansion order");
  int M = 6 * maxJ;
  if (p.order < M) throw ResourceError("jets of order " + std::to_string(p.order) + " cannot resolve C_" + std::to_string(maxJ));
  int d = p.arity;
  FLExpansion e;
  e.arity = d;

  std::vector<Complex> hinv;
  if (d == 1) {
    hinv = {Complex(1.0) / p.hessian[0]};
    e.detInvSqrt = Complex(1.0) / sqrt(p.hessian[0]);
  } else {
    const auto& H = p.hessian;
    Complex det = H[0] * H[3] - H[1] * H[2];
    hinv = {H[3] / det, -H[1] / det, -H[2] / det, H[0] / det};
    Complex tr = H[0] + H[3];
    Complex disc = sqrt(tr * tr - det * Complex(4.0));
    Complex l1 = (tr + disc) * Complex(0.5), l2 = (tr - disc) * Complex(0.5);
    e.detInvSqrt = Complex(1.0) / (sqrt(l1) * sqrt(l2));
  }

  // Q(xi) = xi^T H^-1 xi; D^m f(0) = sum_{|alpha| = 2m} f_alpha alpha! [xi^alpha] Q^m.
  Jet Q(d, M);
  if (d == 1) Q.at(2) = hinv[0];
  else {
    Q.at(2, 0) = hinv[0];
    Q.at(1, 1) = hinv[1] + hinv[2];
    Q.at(0, 2) = hinv[3];
  }
  int maxM = 3 * maxJ;
  std::vector<Jet> Qpow;
  Qpow.push_back(Jet::constant(d, M, Complex(1.0)));
  for (int m = 1; m <= maxM; ++m) Qpow.push_back(Qpow.back() * Q);

  std::vector<Real> fact(2 * M + 2);
  fact[0] = Real(1L);
  for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * Real(static_cast<long>(k));

  auto Dm = [&](const Jet& f, int m) {
    Complex s;
    if (d == 1) return f.at(2 * m) * Qpow[m].at(2 * m) * fact[2 * m];
    for (int q = 0; q <= 2 * m; ++q) s += f.at(2 * m - q, q) * Qpow[m].at(2 * m - q, q) * (fact[2 * m - q] * fact[q]);
    return s;
  };

  Jet phibar = p.phase.withOrder(M).dropBelow(3);
  std::vector<Jet> Apow;
  Apow.push_back(p.amplitude.withOrder(M));
  for (int l = 1; l <= 2 * maxJ; ++l) Apow.push_back(Apow.back() * phibar);

  for (int j = 0; j <= maxJ; ++j) {
    Complex cj;
    Real scale(0L);
    for (int l = 0; l <= 2 * j; ++l) {
      Real den = pow(Real(2L), static_cast<long>(l + j)) * fact[l] * fact[l + j];
      Complex term = Dm(Apow[l], l + j) * (Real(l % 2 ? -1L : 1L) / den);
      scale += abs(term);
      cj += term;
    }
    e.C.push_back(cj);
    e.termScale.push_back(scale);
  }
  for (int j = 0; j <= maxJ; ++j)
    if (!e.isZero(j, zeroThreshold)) {
      e.jStar = j;
      break;
    }
  return e;
}

int vanishingOrderBound(int k) {
  if (k < 0) throw InvalidArgument("negative vanishing order");
  return (k + 1) / 2;
}

Integrand residueReduce(const Integrand& term, Axis axis, const QuadraticNumber& coordinate) {
  if (coordinate != QuadraticNumber(1))
    throw InvalidArgument(std::string("residue on ") + axisName(axis) + " needs the coordinate 1, got " +
                          coordinate.toString());
  if (term.fixed(axis)) throw InvalidArgument(std::string("coordinate ") + axisName(axis) + " is already fixed");
  int p = term.pole(axis);
  if (p == 0) throw InvalidArgument(std::string("no (1-") + axisName(axis) + ") factor in the denominator");
  if (p > 1) throw UnhandledRegimeError("residue at a pole of order " + std::to_string(p));
  Integrand r = term;
  r.numerator = term.numerator.substitute(axis, 1);
  if (axis == Axis::X) {
    r.poleX = 0;
    r.monoX = 0;
    r.fixedX = true;
  } else {
    r.poleY = 0;
    r.monoY = 0;
    r.fixedY = true;
  }
  r.history += std::string("res ") + axisName(axis) + "; ";
  return r;
}

Integrand cancelPoles(const Integrand& term) {
  Integrand r = term;
  for (Axis a : {Axis::X, Axis::Y}) {
    int& p = a == Axis::X ? r.poleX : r.poleY;
    while (p > 0 && !r.fixed(a) && !r.numerator.isZero() && r.numerator.divisibleByOneMinus(a)) {
      r.numerator = r.numerator.divideByOneMinus(a);
      --p;
    }
  }
  return r;
}

std::vector<SplitSummand> splitNumerator(const Integrand& term, const CriticalPoint& cp, Regime regime,
                                         const Model& model, const Weights& weights) {
  if (regime != Regime::AxialA && regime != Regime::AxialB) return {{term, true}};
  if (!cp.exact || cp.exact->x != QuadraticNumber(1) || cp.exact->y != QuadraticNumber(1))
    throw UnhandledRegimeError("axial split expects the dominant point (1, 1)");
  FactoredRational fr = buildGF(model, weights);
  if (!(term.numerator == fr.numerator()))
    throw UnhandledRegimeError("axial split expects the unreduced numerator");
  Inventory inv(model, weights);
  Point one;
  std::optional<Axis> u;
  for (Axis a : {Axis::X, Axis::Y})
    if (!u && evalQ(inv.P().derivative(a), one).sign() < 0) u = a;
  if (!u) throw UnhandledRegimeError("no axis along which the height decreases at (1, 1)");
  Axis v = other(*u);

  for (std::size_t i = 0; i < fr.numeratorFactors.size(); ++i) {
    const Poly2& f = fr.numeratorFactors[i];
    if (f.evaluate<Rational>(Rational(1), Rational(1)) != 0) continue;
    Poly2 rest(Rational(1));
    for (std::size_t k = 0; k < fr.numeratorFactors.size(); ++k)
      if (k != i) rest = rest * fr.numeratorFactors[k];
    Poly2 f2 = f.substitute(*u, 1);
    Poly2 f1 = f - f2;
    if (!f1.divisibleByOneMinus(*u) || !f2.divisibleByOneMinus(v)) continue;
    SplitSummand s1{term, true}, s2{term, true};
    s1.term.numerator = f1 * rest;
    s1.term.history += std::string("split ") + axisName(*u) + "-part; ";
    s2.term.numerator = f2 * rest;
    s2.term.history += std::string("split ") + axisName(v) + "-part; ";
    return {s1, s2};
  }
  throw UnhandledRegimeError("no numerator factor admits the axial split");
}

std::vector<Contribution> analyzeTerm(const Integrand& term, const Model& model, const Weights& weights,
                                      const AsymptoticOptions& options) {
  Context ctx{model, weights, options, Inventory(model, weights).P()};
  std::vector<Contribution> out;
  analyze(term, ctx, out);
  return out;
}

Real AsymptoticEstimate::predict(std::size_t n) const {
  Real nn(static_cast<long>(n));
  Complex osc(gamma);
  for (const auto& p : periodic) osc += p.c * pow(p.u, static_cast<long>(n));
  Real base = pow(rhoFloat, static_cast<long>(n));
  if (n == 0) return base * osc.re;
  return base * pow(nn, -Real(r)) * osc.re;
}

AsymptoticEstimate asymptotics(const Model& model, const Weights& weights, const AsymptoticOptions& options) {
  AsymptoticEstimate est;
  est.model = model;
  est.weights = weights;
  est.regime = classify(weights, model);
  est.conjectured = isConjectured(est.regime);

  FactoredRational fr = buildGF(model, weights);
  Integrand base = Integrand::fromGF(fr);
  CriticalPoint dom = selectDominant(criticalPoints(model, weights), model, weights);
  est.cone = normalCone(dom, model, weights).status;

  est.summands = options.useSplit ? splitNumerator(base, dom, est.regime, model, weights)
                                  : std::vector<SplitSummand>{{base, true}};
  for (std::size_t i = 0; i < est.summands.size(); ++i) {
    auto cs = analyzeTerm(est.summands[i].term, model, weights, options);
    for (auto& c : cs) {
      c.summand = i;
      est.contributions.push_back(std::move(c));
    }
  }

  std::optional<QuadraticNumber> rho;
  for (const auto& c : est.contributions)
    if (!c.isZero() && (!rho || c.height > *rho)) rho = c.height;
  if (!rho) throw DegenerateError("every contribution vanishes");
  std::optional<Rational> r;
  for (const auto& c : est.contributions)
    if (!c.isZero() && c.height == *rho && (!r || c.r < *r)) r = c.r;

  Complex gamma;
  std::vector<bool> leads(est.summands.size(), false);
  for (const auto& c : est.contributions) {
    if (c.isZero() || c.height != *rho || c.r != *r) continue;
    if (c.x != dom.exact->x || c.y != dom.exact->y)
      throw InconsistencyError("leading contribution at (" + c.x.toString() + ", " + c.y.toString() +
                               ") is not the dominant point");
    gamma += c.constant;
    for (const auto& p : c.periodic) est.periodic.push_back(p);
    leads[c.summand] = true;
  }
  for (std::size_t i = 0; i < leads.size(); ++i) est.summands[i].contributing = leads[i];

  QuadraticNumber expected = exponentialGrowth(est.regime, weights, model);
  if (*rho != expected)
    throw InconsistencyError("growth " + rho->toString() + " disagrees with the regime's closed form " +
                             expected.toString());
  est.rho = *rho;
  est.rhoFloat = rho->toReal();
  est.r = *r;
  est.gamma = gamma.re;
  est.gammaImag = gamma.im;
  if (abs(gamma.im) > Real(1e-9) * abs(gamma.re))
    throw InconsistencyError("leading constant is not real: imaginary part " + gamma.im.toString(6));
  if (gamma.re.sign() <= 0) throw InconsistencyError("leading constant is not positive: " + gamma.re.toString(12));
  return est;
}

}  // namespace weylwalks
