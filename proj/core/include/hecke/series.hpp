#pragma once

#include <string>
#include <vector>

#include "hecke/gf.hpp"

namespace hecke {

// Context for F = F_q((t)) and its unramified extension E = F_{q^r}((t)).
// prec is the session working precision: the default number of reliable
// t-adic terms created by operations that must truncate (series inversion).
struct LocalField {
  long q = 0;
  int r = 1;
  int prec = 24;
  GFPtr k;  // residue field F_{q^r}

  LocalField() = default;
  LocalField(long q_, int r_, int prec_);
  long residue_size() const { return k->size(); }
  LocalField base() const { return LocalField(q, 1, prec); }
  LocalField with_prec(int p) const { return LocalField(q, r, p); }
  bool same_field(const LocalField& o) const { return q == o.q && r == o.r; }
};

// Truncated Laurent series over the residue field. Coefficients are reliable
// for exponents < cap(); arithmetic propagates the exact guaranteed cap and
// throws precision_error instead of silently truncating a decision.
class SeriesScalar {
 public:
  static constexpr int kExactCap = 1 << 28;

  SeriesScalar() = default;
  static SeriesScalar zero(const LocalField& F);
  static SeriesScalar zero_to(const LocalField& F, int cap);
  static SeriesScalar from_int(const LocalField& F, long c);
  static SeriesScalar monomial(const LocalField& F, long coeff_index, int exponent);
  static SeriesScalar t_power(const LocalField& F, int exponent);
  static SeriesScalar one(const LocalField& F);
  // sum coeffs[i] * t^(val+i), exact.
  static SeriesScalar from_poly(const LocalField& F, int val, std::vector<long> coeffs);

  const LocalField& field() const { return F_; }
  int cap() const { return cap_; }
  bool exact() const { return cap_ >= kExactCap; }
  // True when no nonzero coefficient is known below cap().
  bool is_zero() const { return c_.empty(); }
  bool known_nonzero() const { return !c_.empty(); }
  int valuation() const;
  long coeff(int exponent) const;
  // Highest exponent carrying a nonzero known coefficient; requires nonzero.
  int top_exponent() const;

  SeriesScalar operator+(const SeriesScalar& o) const;
  SeriesScalar operator-(const SeriesScalar& o) const;
  SeriesScalar operator-() const;
  SeriesScalar operator*(const SeriesScalar& o) const;
  SeriesScalar inverse() const;
  SeriesScalar operator/(const SeriesScalar& o) const { return *this * o.inverse(); }
  SeriesScalar shifted(int dexp) const;  // multiply by t^dexp

  SeriesScalar frobenius() const;  // c -> c^q on every coefficient
  SeriesScalar frobenius_power(int k) const;

  SeriesScalar truncated(int new_cap) const;
  // The exact polynomial formed by the coefficients with exponent < m;
  // requires cap() >= m.
  SeriesScalar polynomial_below(int m) const;

  // Equality of all coefficients below min(cap, o.cap).
  bool matches(const SeriesScalar& o) const;
  // True when every coefficient lies in the sigma-fixed base subfield.
  bool over_base() const;

  std::string str() const;

 private:
  LocalField F_;
  int lo_ = 0;  // exponent of c_[0]; when c_ is empty the value is 0 + O(t^cap)
  std::vector<long> c_;
  int cap_ = kExactCap;

  void normalize();
  SeriesScalar(LocalField F, int lo, std::vector<long> c, int cap)
      : F_(std::move(F)), lo_(lo), c_(std::move(c)), cap_(cap) {
    normalize();
  }
};

bool same_series(const SeriesScalar& a, const SeriesScalar& b);

// Coefficient-wise subfield transport between F_q((t)) and F_{q^r}((t)).
SeriesScalar embed_series(const SeriesScalar& x, const LocalField& E);
SeriesScalar project_series(const SeriesScalar& x, const LocalField& F);

}  // namespace hecke
