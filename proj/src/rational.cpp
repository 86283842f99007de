#include "weylwalks/rational.hpp"

#include <cctype>

#include "weylwalks/errors.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

namespace {

bool isIntegerText(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parseInteger(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parseRational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!isIntegerText(num) || !isIntegerText(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("expected an exact fraction p/q, got '" + text + "'");
  Integer d = parseInteger(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(parseInteger(num), d);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(10); }
std::string toString(const Integer& z) { return z.get_str(10); }

std::string toDecimal(const Rational& q, int digits) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  PrecisionScope scope(static_cast<unsigned>(digits * 3.33) + 32);
  return Real(q).toString(digits);
}

Rational powRational(const Rational& base, long exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), e);
  result.canonicalize();
  return result;
}

int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace weylwalks
