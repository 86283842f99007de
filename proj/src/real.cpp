#include "weylwalks/real.hpp"

#include <cstdlib>
#include <ostream>

#include "weylwalks/errors.hpp"

namespace weylwalks {

namespace {
thread_local unsigned tPrecision = kDefaultPrecisionBits;
}

unsigned workingPrecision() { return tPrecision; }

void setWorkingPrecision(unsigned bits) {
  if (bits < 16 || bits > 1u << 16) throw InvalidArgument("precision out of range: " + std::to_string(bits));
  tPrecision = bits;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(tPrecision) { setWorkingPrecision(bits); }
PrecisionScope::~PrecisionScope() { tPrecision = saved_; }

Real::Real() {
  mpfr_init2(v_, tPrecision);
  mpfr_set_zero(v_, 1);
}

Real::Real(double d) {
  mpfr_init2(v_, tPrecision);
  mpfr_set_d(v_, d, MPFR_RNDN);
}

Real::Real(long v) {
  mpfr_init2(v_, tPrecision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& z) {
  mpfr_init2(v_, tPrecision);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& q) {
  mpfr_init2(v_, tPrecision);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real Real::fromString(const std::string& s) {
  Real r;
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("not a number: " + s);
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::toString(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

#define WW_UNARY(name, fn)             \
  Real name(const Real& x) {           \
    Real r;                            \
    fn(r.raw(), x.raw(), MPFR_RNDN);   \
    return r;                          \
  }
WW_UNARY(abs, mpfr_abs)
WW_UNARY(sqrt, mpfr_sqrt)
WW_UNARY(exp, mpfr_exp)
WW_UNARY(log, mpfr_log)
WW_UNARY(log2, mpfr_log2)
WW_UNARY(sin, mpfr_sin)
WW_UNARY(cos, mpfr_cos)
#undef WW_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long e) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& e) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.toString(20); }

Complex Complex::polar(const Real& modulus, const Real& angle) {
  return Complex(modulus * cos(angle), modulus * sin(angle));
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
  if (z.isZero()) return Complex(Real(0L), Real(0L));
  Real half(0.5);
  return Complex::polar(sqrt(abs(z)), arg(z) * half);
}

Complex pow(const Complex& z, long e) {
  if (e < 0) return Complex(1.0) / pow(z, -e);
  Complex result(1.0), base = z;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void addProduct(Complex& acc, const Complex& a, const Complex& b, MulScratch& s) {
  mpfr_mul(s.t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(s.t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
  mpfr_add(acc.re.raw(), acc.re.raw(), s.t1.raw(), MPFR_RNDN);
  mpfr_mul(s.t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_mul(s.t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(s.t1.raw(), s.t1.raw(), s.t2.raw(), MPFR_RNDN);
  mpfr_add(acc.im.raw(), acc.im.raw(), s.t1.raw(), MPFR_RNDN);
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

}  // namespace weylwalks
