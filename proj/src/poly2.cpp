#include "weylwalks/poly2.hpp"

#include <algorithm>
#include <climits>
#include <vector>

#include "weylwalks/errors.hpp"

namespace weylwalks {

Poly2 Poly2::monomial(const Rational& c, int ex, int ey) {
  Poly2 p;
  p.add(ex, ey, c);
  return p;
}

Rational Poly2::coefficient(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add(int ex, int ey, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponent{ex, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

Poly2 operator*(const Rational& c, const Poly2& p) {
  Poly2 r;
  if (c == 0) return r;
  for (const auto& [e, v] : p.terms_) r.terms_.emplace(e, c * v);
  return r;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int Poly2::minDegree(Axis a) const {
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, a == Axis::X ? e.first : e.second);
  return terms_.empty() ? 0 : m;
}

int Poly2::maxDegree(Axis a) const {
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, a == Axis::X ? e.first : e.second);
  return terms_.empty() ? 0 : m;
}

int Poly2::totalDegree() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.first + e.second);
  return m;
}

Poly2 Poly2::substitute(Axis a, const Rational& value) const {
  Poly2 r;
  for (const auto& [e, c] : terms_) {
    int k = a == Axis::X ? e.first : e.second;
    Rational f = value == 1 ? c : c * powRational(value, k);
    if (a == Axis::X) r.add(0, e.second, f);
    else r.add(e.first, 0, f);
  }
  return r;
}

Poly2 Poly2::derivative(Axis a) const {
  Poly2 r;
  for (const auto& [e, c] : terms_) {
    int k = a == Axis::X ? e.first : e.second;
    if (k == 0) continue;
    if (a == Axis::X) r.add(e.first - 1, e.second, c * k);
    else r.add(e.first, e.second - 1, c * k);
  }
  return r;
}

Poly2 Poly2::divideByOneMinus(Axis a) const {
  if (!divisibleByOneMinus(a)) throw InvalidArgument(std::string("polynomial not divisible by (1-") + axisName(a) + ")");
  // Group by the other exponent; p(v)/(1-v) has prefix-sum coefficients.
  std::map<int, std::map<int, Rational>> rows;
  for (const auto& [e, c] : terms_) {
    int k = a == Axis::X ? e.first : e.second;
    int o = a == Axis::X ? e.second : e.first;
    rows[o][k] = c;
  }
  Poly2 r;
  for (const auto& [o, row] : rows) {
    int lo = row.begin()->first, hi = row.rbegin()->first;
    Rational acc(0);
    for (int k = lo; k < hi; ++k) {
      auto it = row.find(k);
      if (it != row.end()) acc += it->second;
      if (a == Axis::X) r.add(k, o, acc);
      else r.add(o, k, acc);
    }
  }
  return r;
}

Poly2 Poly2::swapped() const {
  Poly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

std::string Poly2::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Rational m = abs(c);
    bool unit = m == 1 && (e.first != 0 || e.second != 0);
    if (!unit) s += weylwalks::toString(m);
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!s.empty() && s.back() != ' ' && s.back() != '-') s += "*";
      s += v;
      if (k != 1) s += "^" + std::to_string(k);
    };
    var("x", e.first);
    var("y", e.second);
  }
  return s;
}

}  // namespace weylwalks
