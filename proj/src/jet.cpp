#include "weylwalks/jet.hpp"

#include <algorithm>

#include "weylwalks/errors.hpp"

namespace weylwalks {

namespace {

// out[d1 + d2] += a[d1] * b[d2] for homogeneous components.
void mulComponents(int arity, const Complex* a, int da, const Complex* b, int db, Complex* out, MulScratch& s) {
  if (arity == 1) {
    addProduct(out[0], a[0], b[0], s);
    return;
  }
  for (int ja = 0; ja <= da; ++ja) {
    if (a[ja].isZero()) continue;
    for (int jb = 0; jb <= db; ++jb) addProduct(out[ja + jb], a[ja], b[jb], s);
  }
}

std::vector<char> nonzeroComponents(int arity, int order, const std::vector<Complex>& c) {
  std::vector<char> nz(order + 1, 0);
  for (int d = 0; d <= order; ++d) {
    std::size_t off = Jet::offset(arity, d);
    for (int k = 0; k < Jet::componentSize(arity, d) && !nz[d]; ++k)
      if (!c[off + k].isZero()) nz[d] = 1;
  }
  return nz;
}

void checkShape(const Jet& a, const Jet& b) {
  if (a.arity() != b.arity() || a.order() != b.order()) throw InvalidArgument("jet shapes differ");
}

}  // namespace

Jet::Jet(int arity, int order) : arity_(arity), order_(order) {
  if (arity < 1 || arity > 2) throw InvalidArgument("jet arity must be 1 or 2");
  if (order < 0 || order > kMaxJetOrder) throw ResourceError("jet order out of range: " + std::to_string(order));
  c_.resize(offset(arity, order + 1));
}

Jet Jet::constant(int arity, int order, const Complex& c) {
  Jet j(arity, order);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(int arity, int order, int k) {
  Jet j(arity, order);
  if (order >= 1) j.at(k == 0 ? 1 : 0, k == 0 ? 0 : 1) = Complex(1.0);
  return j;
}

Jet Jet::expLinear(int arity, int order, const Complex& c0, const Complex& c1) {
  Jet j(arity, order);
  std::vector<Complex> p0(order + 1), p1(order + 1);
  p0[0] = Complex(1.0);
  p1[0] = Complex(1.0);
  for (int k = 1; k <= order; ++k) {
    Real inv = Real(1L) / Real(static_cast<long>(k));
    p0[k] = p0[k - 1] * c0 * inv;
    p1[k] = p1[k - 1] * c1 * inv;
  }
  if (arity == 1) {
    for (int i = 0; i <= order; ++i) j.at(i) = p0[i];
  } else {
    for (int d = 0; d <= order; ++d)
      for (int q = 0; q <= d; ++q) j.at(d - q, q) = p0[d - q] * p1[q];
  }
  return j;
}

std::size_t Jet::index(int i, int j) const {
  if (arity_ == 1 && j != 0) throw InvalidArgument("second exponent on a one-variable jet");
  int d = i + j;
  if (i < 0 || j < 0 || d > order_) throw InvalidArgument("jet index beyond truncation order");
  return offset(arity_, d) + (arity_ == 1 ? 0 : j);
}

Jet& Jet::operator+=(const Jet& o) {
  checkShape(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  checkShape(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Complex& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  checkShape(a, b);
  Jet r(a.arity_, a.order_);
  MulScratch s;
  auto nzA = nonzeroComponents(a.arity_, a.order_, a.c_), nzB = nonzeroComponents(b.arity_, b.order_, b.c_);
  for (int da = 0; da <= a.order_; ++da) {
    if (!nzA[da]) continue;
    for (int db = 0; da + db <= a.order_; ++db) {
      if (!nzB[db]) continue;
      mulComponents(a.arity_, &a.c_[Jet::offset(a.arity_, da)], da, &b.c_[Jet::offset(b.arity_, db)], db,
                    &r.c_[Jet::offset(a.arity_, da + db)], s);
    }
  }
  return r;
}

Jet Jet::reciprocal() const {
  if (c_[0].isZero()) throw InvalidArgument("reciprocal of a jet with zero constant term");
  Jet r(arity_, order_);
  MulScratch s;
  auto nz = nonzeroComponents(arity_, order_, c_);
  Complex inv0 = Complex(1.0) / c_[0];
  r.c_[0] = inv0;
  std::vector<Complex> tmp;
  for (int d = 1; d <= order_; ++d) {
    tmp.assign(componentSize(arity_, d), Complex());
    for (int k = 1; k <= d; ++k)
      if (nz[k]) mulComponents(arity_, &c_[offset(arity_, k)], k, &r.c_[offset(arity_, d - k)], d - k, tmp.data(), s);
    for (int q = 0; q < componentSize(arity_, d); ++q) r.c_[offset(arity_, d) + q] = -(tmp[q] * inv0);
  }
  return r;
}

Jet Jet::exp() const {
  // Euler operator E: E(exp f) = exp(f) E(f); degree-d part gives d g_d = sum_k k f_k g_{d-k}.
  Jet g(arity_, order_);
  MulScratch s;
  auto nz = nonzeroComponents(arity_, order_, c_);
  g.c_[0] = weylwalks::exp(c_[0]);
  std::vector<Complex> tmp;
  for (int d = 1; d <= order_; ++d) {
    tmp.assign(componentSize(arity_, d), Complex());
    for (int k = 1; k <= d; ++k) {
      if (!nz[k]) continue;
      std::vector<Complex> kf(c_.begin() + offset(arity_, k), c_.begin() + offset(arity_, k) + componentSize(arity_, k));
      Real kk(static_cast<long>(k));
      for (auto& v : kf) v *= kk;
      mulComponents(arity_, kf.data(), k, &g.c_[offset(arity_, d - k)], d - k, tmp.data(), s);
    }
    Real inv = Real(1L) / Real(static_cast<long>(d));
    for (int q = 0; q < componentSize(arity_, d); ++q) g.c_[offset(arity_, d) + q] = tmp[q] * inv;
  }
  return g;
}

Jet Jet::log() const {
  if (c_[0].isZero()) throw InvalidArgument("log of a jet with zero constant term");
  // f E(g) = E(f): d f_0 g_d = d f_d - sum_{k=1}^{d-1} k g_k f_{d-k}.
  Jet g(arity_, order_);
  MulScratch s;
  auto nz = nonzeroComponents(arity_, order_, c_);
  g.c_[0] = weylwalks::log(c_[0]);
  Complex inv0 = Complex(1.0) / c_[0];
  std::vector<Complex> tmp;
  for (int d = 1; d <= order_; ++d) {
    int sz = componentSize(arity_, d);
    tmp.assign(sz, Complex());
    for (int k = 1; k < d; ++k) {
      if (!nz[d - k]) continue;
      std::vector<Complex> kg(g.c_.begin() + offset(arity_, k), g.c_.begin() + offset(arity_, k) + componentSize(arity_, k));
      Real kk(static_cast<long>(k));
      for (auto& v : kg) v *= kk;
      mulComponents(arity_, kg.data(), k, &c_[offset(arity_, d - k)], d - k, tmp.data(), s);
    }
    Real dd(static_cast<long>(d));
    Real invd = Real(1L) / dd;
    for (int q = 0; q < sz; ++q) {
      Complex v = c_[offset(arity_, d) + q] - tmp[q] * invd;
      g.c_[offset(arity_, d) + q] = v * inv0;
    }
  }
  return g;
}

Jet Jet::pow(unsigned e) const {
  Jet result = constant(arity_, order_, Complex(1.0));
  Jet base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Jet Jet::dropBelow(int d) const {
  Jet r = *this;
  std::size_t end = offset(arity_, std::min(d, order_ + 1));
  for (std::size_t k = 0; k < end; ++k) r.c_[k] = Complex();
  return r;
}

Jet Jet::withOrder(int order) const {
  Jet r(arity_, order);
  std::size_t n = std::min(r.c_.size(), c_.size());
  for (std::size_t k = 0; k < n; ++k) r.c_[k] = c_[k];
  return r;
}

Complex Jet::evaluate(const std::vector<Complex>& theta) const {
  if (static_cast<int>(theta.size()) != arity_) throw InvalidArgument("evaluation point has the wrong arity");
  Complex sum;
  for (int d = 0; d <= order_; ++d) {
    if (arity_ == 1) {
      sum += c_[d] * weylwalks::pow(theta[0], static_cast<long>(d));
    } else {
      for (int q = 0; q <= d; ++q) sum += c_[offset(2, d) + q] * weylwalks::pow(theta[0], static_cast<long>(d - q)) * weylwalks::pow(theta[1], static_cast<long>(q));
    }
  }
  return sum;
}

Real Jet::norm() const {
  Real m(0L);
  for (const auto& c : c_) {
    Real a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Jet jetOfMonomial(const Rational& c, int ex, int ey, const Complex& x0, const Complex& y0,
                  const std::vector<Axis>& kept, int order) {
  int arity = static_cast<int>(kept.size());
  if (arity < 1 || arity > 2) throw InvalidArgument("jets need one or two kept variables");
  Complex value = Complex(Real(c)) * pow(x0, static_cast<long>(ex)) * pow(y0, static_cast<long>(ey));
  auto rate = [&](Axis a) { return Complex(Real(0L), Real(static_cast<long>(a == Axis::X ? ex : ey))); };
  Complex c0 = rate(kept[0]);
  Complex c1 = arity == 2 ? rate(kept[1]) : Complex();
  Jet j = Jet::expLinear(arity, order, c0, c1);
  j *= value;
  return j;
}

Jet jetOfPhase(const Poly2& P, const Complex& x0, const Complex& y0, const std::vector<Axis>& kept, int order) {
  int arity = static_cast<int>(kept.size());
  Jet sum(arity, order);
  for (const auto& [e, c] : P.terms()) sum += jetOfMonomial(c, e.first, e.second, x0, y0, kept, order);
  Complex p0 = sum.at(0, 0);
  if (p0.isZero()) throw DegenerateError("height kernel vanishes at the expansion point");
  sum *= Complex(1.0) / p0;
  sum.at(0, 0) = Complex(1.0);
  return -sum.log();
}

Jet jetOfPhase(const Model& model, const Weights& weights, const Complex& x0, const Complex& y0,
               const std::vector<Axis>& kept, int order) {
  return jetOfPhase(Inventory(model, weights).P(), x0, y0, kept, order);
}

Jet jetOfAmplitude(const Integrand& term, const Complex& x0, const Complex& y0, const std::vector<Axis>& kept,
                   int order) {
  int arity = static_cast<int>(kept.size());
  for (Axis a : kept)
    if (term.fixed(a)) throw InvalidArgument("a kept variable was fixed by a residue");
  Complex one(1.0);
  Complex xx = term.fixedX ? one : x0, yy = term.fixedY ? one : y0;
  Jet num(arity, order);
  for (const auto& [e, c] : term.numerator.terms()) num += jetOfMonomial(c, e.first, e.second, xx, yy, kept, order);
  Jet amp = num * jetOfMonomial(term.weight * term.scale, term.fixedX ? 0 : -term.monoX,
                                term.fixedY ? 0 : -term.monoY, xx, yy, kept, order);
  for (Axis a : {Axis::X, Axis::Y}) {
    int p = term.pole(a);
    if (p == 0) continue;
    if (term.fixed(a)) throw InvalidArgument("pole on a fixed coordinate");
    Jet base = Jet::constant(arity, order, one) -
               jetOfMonomial(1, a == Axis::X ? 1 : 0, a == Axis::Y ? 1 : 0, xx, yy, kept, order);
    amp = amp * base.reciprocal().pow(static_cast<unsigned>(p));
  }
  return amp;
}

}  // namespace weylwalks
