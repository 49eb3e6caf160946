#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/bigint.hpp"

namespace hecke {

// Exact value (a + b*v) / q^dexp with v^2 = q, q a numeric prime power.
// Canonical: dexp >= 0, and q divides neither both a and b while dexp > 0.
struct QuadValue {
  Int a;
  Int b;
  long q = 0;
  int dexp = 0;

  void normalize();
  bool operator==(const QuadValue&) const = default;
  bool is_zero() const { return a == 0 && b == 0; }
};

QuadValue operator+(const QuadValue& x, const QuadValue& y);
QuadValue operator*(const QuadValue& x, const QuadValue& y);
std::ostream& operator<<(std::ostream& os, const QuadValue& x);

// Laurent polynomial in the formal square root v of q, coefficients in Z.
// Invariant: no zero coefficients are stored (canonical form), so equality
// is structural.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long c);  // constant c * v^0
  explicit LaurentScalar(const Int& c);

  // c * v^e
  static LaurentScalar term(const Int& c, int e);
  static LaurentScalar v_power(int e) { return term(1, e); }

  bool is_zero() const { return coeff_.empty(); }
  bool operator==(const LaurentScalar&) const = default;

  const std::map<int, Int>& terms() const { return coeff_; }
  const Int& coeff(int e) const;       // 0 if absent
  void set_coeff(int e, const Int& c); // erases on zero

  int min_exp() const;  // throws on zero
  int max_exp() const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar operator-() const;
  LaurentScalar operator*(const LaurentScalar& o) const;

  // Exponent substitution v -> v^r (base change on coefficient rings).
  LaurentScalar stretch(int r) const;

  // Exact division; nullopt when the quotient is not in Z[v, v^-1].
  std::optional<LaurentScalar> divided_by(const LaurentScalar& d) const;

  // Evaluation with v^2 = q, exact in Z[v]/(v^2 - q).
  QuadValue specialize(long q) const;

  // Value at v = x for rational x (used by interpolation oracles); exponents
  // must be >= 0 unless x != 0.
  Rational eval_rational(const Rational& x) const;

  std::string str() const;  // e.g. "v^-2 + 2 - v^3", exponent-sorted

 private:
  std::map<int, Int> coeff_;
};

LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b);
LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b);
std::ostream& operator<<(std::ostream& os, const LaurentScalar& s);

// v^{2k} = q^k: plain polynomials in q live inside Z[v, v^-1].
LaurentScalar q_power(int k);

// Poincare polynomial sum_{w in S_{d1} x ... x S_{dk}} q^{l(w)} for the given
// block sizes, as an element of Z[v, v^-1] in q = v^2.
LaurentScalar poincare_poly(const std::vector<int>& blocks);

}  // namespace hecke
