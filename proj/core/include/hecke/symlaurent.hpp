#pragma once

#include <map>
#include <ostream>

#include "hecke/coweight.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// Symmetric Laurent polynomial in x_1..x_n over Z[v, v^-1].  One stored term
// per S_n-orbit, keyed by the dominant exponent vector; the coefficient is
// that of each individual monomial in the orbit.
class SymLaurent {
 public:
  SymLaurent() = default;
  explicit SymLaurent(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const SymLaurent&) const = default;

  const std::map<Coweight, LaurentScalar>& terms() const { return terms_; }

  // Coefficient of the monomial x^m (any m; looked up via its sorted orbit).
  LaurentScalar coeff(const Coweight& m) const;
  void set_coeff(const Coweight& dominant, const LaurentScalar& c);

  SymLaurent& operator+=(const SymLaurent& o);
  SymLaurent& operator-=(const SymLaurent& o);
  SymLaurent operator*(const SymLaurent& o) const;
  SymLaurent operator*(const LaurentScalar& c) const;
  SymLaurent operator-() const;

  // x_i -> x_i^r together with v -> v^r on coefficients.
  SymLaurent substitute_power(int r) const;

  std::string str() const;

 private:
  int rank_ = 0;
  std::map<Coweight, LaurentScalar> terms_;
};

SymLaurent operator+(SymLaurent a, const SymLaurent& b);
SymLaurent operator-(SymLaurent a, const SymLaurent& b);
std::ostream& operator<<(std::ostream& os, const SymLaurent& s);

// Schur polynomial s_m for dominant m (negative entries allowed; the
// determinant character shifts them away).
SymLaurent schur(int rank, const Coweight& m);

// Monomial symmetric function m_lambda.
SymLaurent monomial_sym(int rank, const Coweight& m);

enum class SymBasis { schur, monomial };

// Expansion in the chosen basis; exact, empty only for zero input.
std::map<Coweight, LaurentScalar> expand_in_basis(const SymLaurent& s,
                                                  SymBasis basis);

}  // namespace hecke
