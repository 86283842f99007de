#include "weylwalks/quadratic.hpp"

#include <array>

#include "weylwalks/errors.hpp"

namespace weylwalks {

namespace {

// Removes square factors found by trial division and folds perfect squares.
void reduceRadicand(Integer& d, Rational& coeff) {
  if (d == 0) {
    coeff = 0;
    d = 1;
    return;
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    coeff *= s;
    d = 1;
    return;
  }
  for (unsigned long p = 2; p < 2000; p += (p == 2 ? 1 : 2)) {
    unsigned long p2 = p * p;
    if (d < p2) break;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p2)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p2);
      coeff *= p;
    }
  }
  if (d != 1 && mpz_perfect_square_p(d.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    coeff *= s;
    d = 1;
  }
}

// Re-express w*sqrt(e) over radicand d when d*e is a perfect square.
bool sameField(const Integer& d, const Integer& e, Rational& factor) {
  Integer de = d * e;
  if (!mpz_perfect_square_p(de.get_mpz_t())) return false;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), de.get_mpz_t());
  factor = Rational(s, d);  // sqrt(e) = s/d * sqrt(d)
  factor.canonicalize();
  return true;
}

struct Aligned {
  Rational a0, a1, b0, b1;
  Integer d;
};

Aligned align(const QuadraticNumber& a, const QuadraticNumber& b) {
  Aligned r{a.q0(), a.q1(), b.q0(), b.q1(), 1};
  if (a.isRational()) {
    r.d = b.radicand();
    return r;
  }
  r.d = a.radicand();
  if (b.isRational() || b.radicand() == a.radicand()) return r;
  Rational f;
  if (!sameField(a.radicand(), b.radicand(), f))
    throw InvalidArgument("arithmetic across different quadratic fields: sqrt(" + toString(a.radicand()) +
                          ") and sqrt(" + toString(b.radicand()) + ")");
  r.b1 *= f;
  return r;
}

int rsign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& q0, const Rational& q1, const Integer& d)
    : q0_(q0), q1_(q1), d_(d) {
  if (d_ < 0) throw InvalidArgument("negative radicand");
  if (q1_ == 0) {
    d_ = 1;
    return;
  }
  reduceRadicand(d_, q1_);
  if (d_ == 1) {
    q0_ += q1_;
    q1_ = 0;
  }
}

QuadraticNumber QuadraticNumber::sqrtOf(const Rational& r) {
  if (r < 0) throw InvalidArgument("square root of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  return QuadraticNumber(Rational(0), Rational(1, r.get_den()), r.get_num() * r.get_den());
}

const Rational& QuadraticNumber::rationalValue() const {
  if (!isRational()) throw InvalidArgument("quadratic number is irrational: " + toString());
  return q0_;
}

Real QuadraticNumber::toReal() const {
  if (isRational()) return Real(q0_);
  return Real(q0_) + Real(q1_) * sqrt(Real(d_));
}

double QuadraticNumber::toDouble() const { return toReal().toDouble(); }

std::string QuadraticNumber::toString() const {
  if (isRational()) return weylwalks::toString(q0_);
  std::string s;
  if (q0_ != 0) s = weylwalks::toString(q0_) + (q1_ < 0 ? " - " : " + ");
  else if (q1_ < 0) s = "-";
  Rational c = abs(q1_);
  if (c != 1) s += weylwalks::toString(c) + "*";
  s += "sqrt(" + weylwalks::toString(d_) + ")";
  return s;
}

int QuadraticNumber::sign() const { return signOf(q0_, q1_, d_); }

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  Aligned x = align(a, b);
  return QuadraticNumber(x.a0 + x.b0, x.a1 + x.b1, x.d);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  Aligned x = align(a, b);
  return QuadraticNumber(x.a0 - x.b0, x.a1 - x.b1, x.d);
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  Aligned x = align(a, b);
  return QuadraticNumber(x.a0 * x.b0 + x.a1 * x.b1 * x.d, x.a0 * x.b1 + x.a1 * x.b0, x.d);
}

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (b.sign() == 0) throw InvalidArgument("division by zero quadratic number");
  Aligned x = align(a, b);
  // (a0 + a1 r)/(b0 + b1 r) = (a0 + a1 r)(b0 - b1 r)/(b0^2 - b1^2 d)
  Rational den = x.b0 * x.b0 - x.b1 * x.b1 * x.d;
  return QuadraticNumber((x.a0 * x.b0 - x.a1 * x.b1 * x.d) / den, (x.a1 * x.b0 - x.a0 * x.b1) / den, x.d);
}

int signOf(const Rational& u, const Rational& v, const Integer& d) {
  int su = rsign(u), sv = rsign(v);
  if (sv == 0 || d == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  int c = cmp(u * u, v * v * d);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

int signOf(const Rational& u, const Rational& v, const Integer& d, const Rational& w, const Integer& e) {
  int sx = signOf(u, v, d);
  int sy = rsign(w);
  if (sy == 0 || e == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // compare X^2 = u^2 + v^2 d + 2uv sqrt(d) against Y^2 = w^2 e
  int c = signOf(u * u + v * v * d - w * w * e, 2 * u * v, d);
  if (c == 0) return 0;
  return c > 0 ? sx : sy;
}

int compare(const QuadraticNumber& a, const QuadraticNumber& b) {
  return signOf(a.q0_ - b.q0_, a.q1_, a.d_, -b.q1_, b.d_);
}

}  // namespace weylwalks
