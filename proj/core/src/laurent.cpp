#include "hecke/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

void QuadValue::normalize() {
  if (a == 0 && b == 0) {
    dexp = 0;
    return;
  }
  while (dexp > 0 && a % q == 0 && b % q == 0) {
    a /= q;
    b /= q;
    --dexp;
  }
}

QuadValue operator+(const QuadValue& x, const QuadValue& y) {
  if (x.q != y.q) throw input_error("QuadValue: mixed q");
  Int qa = 1, qb = 1;
  for (int i = y.dexp; i < std::max(x.dexp, y.dexp); ++i) qa *= x.q;
  for (int i = x.dexp; i < std::max(x.dexp, y.dexp); ++i) qb *= x.q;
  QuadValue r{x.a * qb + y.a * qa, x.b * qb + y.b * qa, x.q,
              std::max(x.dexp, y.dexp)};
  r.normalize();
  return r;
}

QuadValue operator*(const QuadValue& x, const QuadValue& y) {
  if (x.q != y.q) throw input_error("QuadValue: mixed q");
  QuadValue r{x.a * y.a + Int(x.q) * x.b * y.b, x.a * y.b + x.b * y.a, x.q,
              x.dexp + y.dexp};
  r.normalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const QuadValue& x) {
  os << "(" << x.a << (x.b < 0 ? " - " : " + ") << (x.b < 0 ? Int(-x.b) : x.b)
     << "*sqrt(" << x.q << "))";
  if (x.dexp > 0) os << "/" << x.q << "^" << x.dexp;
  return os;
}

LaurentScalar::LaurentScalar(long c) {
  if (c != 0) coeff_[0] = c;
}

LaurentScalar::LaurentScalar(const Int& c) {
  if (c != 0) coeff_[0] = c;
}

LaurentScalar LaurentScalar::term(const Int& c, int e) {
  LaurentScalar s;
  if (c != 0) s.coeff_[e] = c;
  return s;
}

const Int& LaurentScalar::coeff(int e) const {
  static const Int zero = 0;
  auto it = coeff_.find(e);
  return it == coeff_.end() ? zero : it->second;
}

void LaurentScalar::set_coeff(int e, const Int& c) {
  if (c == 0)
    coeff_.erase(e);
  else
    coeff_[e] = c;
}

int LaurentScalar::min_exp() const {
  if (coeff_.empty()) throw input_error("min_exp of zero");
  return coeff_.begin()->first;
}

int LaurentScalar::max_exp() const {
  if (coeff_.empty()) throw input_error("max_exp of zero");
  return coeff_.rbegin()->first;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeff_) {
    Int s = coeff(e) + c;
    set_coeff(e, s);
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeff_) {
    Int s = coeff(e) - c;
    set_coeff(e, s);
  }
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) {
      Int s = r.coeff(e1 + e2) + c1 * c2;
      r.set_coeff(e1 + e2, s);
    }
  return r;
}

LaurentScalar LaurentScalar::stretch(int r) const {
  if (r <= 0) throw input_error("stretch: r must be positive");
  LaurentScalar out;
  for (const auto& [e, c] : coeff_) out.coeff_[e * r] = c;
  return out;
}

std::optional<LaurentScalar> LaurentScalar::divided_by(
    const LaurentScalar& d) const {
  if (d.is_zero()) throw input_error("division by zero LaurentScalar");
  if (is_zero()) return LaurentScalar{};
  // Long division from the top.  Any Laurent quotient q satisfies
  // min_exp(q) = min_exp(this) - min_exp(d), which bounds the iteration.
  const int qmin = min_exp() - d.min_exp();
  const int dd = d.max_exp();
  const Int& lead = d.coeff(dd);
  LaurentScalar rem = *this;
  LaurentScalar quot;
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    if (rtop - dd < qmin) return std::nullopt;
    const Int& c = rem.coeff(rtop);
    if (c % lead != 0) return std::nullopt;
    LaurentScalar t = term(c / lead, rtop - dd);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

QuadValue LaurentScalar::specialize(long q) const {
  QuadValue out{0, 0, q, 0};
  if (coeff_.empty()) return out;
  // Shift by a global q-power so all exponents are >= 0, then reduce v^2 = q.
  int shift = 0;
  if (min_exp() < 0) shift = (-min_exp() + 1) / 2;  // v^{2*shift} multiplier
  out.dexp = shift;
  for (const auto& [e, c] : coeff_) {
    int es = e + 2 * shift;
    Int p = 1;
    for (int i = 0; i < es / 2; ++i) p *= q;
    if (es % 2 == 0)
      out.a += c * p;
    else
      out.b += c * p;
  }
  out.normalize();
  return out;
}

Rational LaurentScalar::eval_rational(const Rational& x) const {
  Rational out = 0;
  for (const auto& [e, c] : coeff_) {
    Rational p = 1;
    if (e >= 0)
      for (int i = 0; i < e; ++i) p *= x;
    else {
      if (x == 0) throw input_error("eval_rational: 0^negative");
      for (int i = 0; i < -e; ++i) p /= x;
    }
    out += Rational(c) * p;
  }
  return out;
}

std::string LaurentScalar::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
  a += b;
  return a;
}

LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
  a -= b;
  return a;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& s) {
  return os << s.str();
}

LaurentScalar q_power(int k) { return LaurentScalar::v_power(2 * k); }

LaurentScalar poincare_poly(const std::vector<int>& blocks) {
  // P_{S_d}(q) = prod_{i=1..d} (1 + q + ... + q^{i-1}); blocks multiply.
  LaurentScalar out(1);
  for (int d : blocks) {
    if (d < 1) throw input_error("poincare_poly: bad block");
    for (int i = 2; i <= d; ++i) {
      LaurentScalar f;
      for (int j = 0; j < i; ++j) f += q_power(j);
      out = out * f;
    }
  }
  return out;
}

}  // namespace hecke
