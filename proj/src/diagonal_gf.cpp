#include "weylwalks/diagonal_gf.hpp"

#include "weylwalks/errors.hpp"

namespace weylwalks {

Poly2 FactoredRational::numerator() const {
  Poly2 g(Rational(1));
  for (const Poly2& f : numeratorFactors) g = g * f;
  return g;
}

FactoredRational buildGF(const Model& model, const Weights& weights) {
  const Rational& a = weights.a();
  const Rational& b = weights.b();
  Poly2 x = Poly2::x(), y = Poly2::y();
  FactoredRational fr{model, weights, {}, Rational(1) / (a * a * a * b * b * b), Inventory(model, weights).K()};
  fr.numeratorFactors.push_back(Rational(b * b) * x - Rational(a) * y * y);
  fr.numeratorFactors.push_back(Rational(b) * x * x - Rational(a * a) * y);
  fr.numeratorFactors.push_back(x * y - Poly2(Rational(a * b)));
  return fr;
}

SeriesBox::SeriesBox(std::size_t nx, std::size_t ny, std::size_t nt)
    : nx_(nx), ny_(ny), nt_(nt), c_(nx * ny * nt) {}

SeriesBox SeriesBox::fromPoly(const Poly2& p, std::size_t nx, std::size_t ny, std::size_t nt) {
  SeriesBox s(nx, ny, nt);
  if (nt == 0) return s;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < 0 || e.second < 0) throw InvalidArgument("series box needs a polynomial, got a Laurent term");
    if (static_cast<std::size_t>(e.first) < nx && static_cast<std::size_t>(e.second) < ny) s.at(e.first, e.second, 0) = c;
  }
  return s;
}

SeriesBox SeriesBox::kernelInverse(const Poly2& K, std::size_t nx, std::size_t ny, std::size_t nt) {
  SeriesBox s(nx, ny, nt);
  if (nt == 0) return s;
  s.at(0, 0, 0) = 1;
  for (std::size_t k = 1; k < nt; ++k)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        const Rational& prev = s.at(i, j, k - 1);
        if (prev == 0) continue;
        for (const auto& [e, c] : K.terms()) {
          if (e.first < 0 || e.second < 0) throw InvalidArgument("kernel must be a polynomial");
          std::size_t ii = i + e.first, jj = j + e.second;
          if (ii < nx && jj < ny) s.at(ii, jj, k) += prev * c;
        }
      }
  return s;
}

SeriesBox operator*(const SeriesBox& f, const SeriesBox& g) {
  if (f.nx_ != g.nx_ || f.ny_ != g.ny_ || f.nt_ != g.nt_) throw InvalidArgument("series box shapes differ");
  SeriesBox r(f.nx_, f.ny_, f.nt_);
  for (std::size_t k1 = 0; k1 < f.nt_; ++k1)
    for (std::size_t j1 = 0; j1 < f.ny_; ++j1)
      for (std::size_t i1 = 0; i1 < f.nx_; ++i1) {
        const Rational& a = f.at(i1, j1, k1);
        if (a == 0) continue;
        for (std::size_t k2 = 0; k1 + k2 < f.nt_; ++k2)
          for (std::size_t j2 = 0; j1 + j2 < f.ny_; ++j2)
            for (std::size_t i2 = 0; i1 + i2 < f.nx_; ++i2) {
              const Rational& b = g.at(i2, j2, k2);
              if (b != 0) r.at(i1 + i2, j1 + j2, k1 + k2) += a * b;
            }
      }
  return r;
}

SeriesBox SeriesBox::reciprocal() const {
  if (c_.empty() || at(0, 0, 0) == 0) throw InvalidArgument("reciprocal needs a nonzero constant term");
  SeriesBox r(nx_, ny_, nt_);
  Rational inv0 = 1 / at(0, 0, 0);
  // Multi-indices in (k, j, i) lexicographic order are visited after all their divisors.
  for (std::size_t k = 0; k < nt_; ++k)
    for (std::size_t j = 0; j < ny_; ++j)
      for (std::size_t i = 0; i < nx_; ++i) {
        if (i == 0 && j == 0 && k == 0) {
          r.at(0, 0, 0) = inv0;
          continue;
        }
        Rational acc(0);
        for (std::size_t k2 = 0; k2 <= k; ++k2)
          for (std::size_t j2 = 0; j2 <= j; ++j2)
            for (std::size_t i2 = 0; i2 <= i; ++i2) {
              if (i2 == i && j2 == j && k2 == k) continue;
              const Rational& f = at(i - i2, j - j2, k - k2);
              if (f != 0) acc += f * r.at(i2, j2, k2);
            }
        r.at(i, j, k) = -acc * inv0;
      }
  return r;
}

SeriesBox SeriesBox::divideByOneMinus(Axis a) const {
  SeriesBox r = *this;
  for (std::size_t k = 0; k < nt_; ++k) {
    if (a == Axis::X) {
      for (std::size_t j = 0; j < ny_; ++j)
        for (std::size_t i = 1; i < nx_; ++i) r.at(i, j, k) += r.at(i - 1, j, k);
    } else {
      for (std::size_t j = 1; j < ny_; ++j)
        for (std::size_t i = 0; i < nx_; ++i) r.at(i, j, k) += r.at(i, j - 1, k);
    }
  }
  return r;
}

std::vector<Rational> diagonalCoefficients(const FactoredRational& fr, std::size_t N, const DiagonalConfig& config) {
  if (N > config.seriesCap)
    throw ResourceError("diagonal extraction beyond the series cap " + std::to_string(config.seriesCap));
  // [x^n y^n t^n] F = scalar * [x^(n+1) y^(n+1) t^n] G/((1 - tK)(1-x)(1-y))
  const std::size_t nx = N + 2, ny = N + 2, nt = N + 1;
  SeriesBox inv = SeriesBox::kernelInverse(fr.kernel, nx, ny, nt);
  SeriesBox g = SeriesBox::fromPoly(fr.numerator(), nx, ny, nt);
  SeriesBox s = (g * inv).divideByOneMinus(Axis::X).divideByOneMinus(Axis::Y);
  std::vector<Rational> out(N + 1);
  for (std::size_t n = 0; n <= N; ++n) out[n] = fr.scalar * s.at(n + 1, n + 1, n);
  return out;
}

Rational diagonalCoefficient(const FactoredRational& fr, std::size_t n, const DiagonalConfig& config) {
  return diagonalCoefficients(fr, n, config)[n];
}

int vanishingOrder(const Poly2& f, const QuadraticNumber& x0, const QuadraticNumber& y0, int maxOrder) {
  if (f.isZero()) return maxOrder;
  std::vector<Poly2> layer{f};
  for (int k = 0; k <= maxOrder; ++k) {
    for (const Poly2& d : layer)
      if (d.evaluate(x0, y0).sign() != 0) return k;
    std::vector<Poly2> next;
    // Derivatives of order k+1: d/dx of every entry, plus d/dy of the last.
    for (const Poly2& d : layer) next.push_back(d.derivative(Axis::X));
    next.push_back(layer.back().derivative(Axis::Y));
    layer = std::move(next);
  }
  return maxOrder;
}

std::vector<int> numeratorVanishingOrders(const FactoredRational& fr, const QuadraticNumber& x0,
                                          const QuadraticNumber& y0) {
  std::vector<int> out;
  for (const Poly2& f : fr.numeratorFactors) out.push_back(vanishingOrder(f, x0, y0));
  return out;
}

}  // namespace weylwalks
