#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace weylwalks {

inline constexpr unsigned kDefaultPrecisionBits = 106;

// Precision in bits used for newly created Real values on the calling thread.
unsigned workingPrecision();
void setWorkingPrecision(unsigned bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

class Real {
 public:
  Real();
  Real(double d);
  Real(int v) : Real(static_cast<long>(v)) {}
  Real(long v);
  Real(const mpz_class& z);
  Real(const mpq_class& q);
  static Real fromString(const std::string& s);
  static Real pi();

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

  double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string toString(int digits = 30) const;
  int sign() const { return mpfr_sgn(v_); }
  bool isZero() const { return mpfr_zero_p(v_) != 0; }
  bool isFinite() const { return mpfr_number_p(v_) != 0; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
Real factorial(unsigned long n);

std::ostream& operator<<(std::ostream& os, const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(const Real& r) : re(r), im(0L) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r) : re(r), im(0L) {}

  static Complex polar(const Real& modulus, const Real& angle);

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return Complex(-re, -im); }
  Complex conj() const { return Complex(re, -im); }
  bool isZero() const { return re.isZero() && im.isZero(); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(const Complex& a, const Complex& b);
};

Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long e);

// acc += a*b with caller-provided scratch to avoid allocations in hot loops.
struct MulScratch {
  Real t1, t2;
};
void addProduct(Complex& acc, const Complex& a, const Complex& b, MulScratch& s);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace weylwalks
