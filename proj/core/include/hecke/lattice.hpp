#pragma once

#include <string>
#include <vector>

#include "hecke/coweight.hpp"
#include "hecke/localmatrix.hpp"

namespace hecke {

// Full-rank O-lattice in F^n, O = F_{q^r}[[t]], stored by its column Hermite
// basis: upper triangular, diagonal t^{a_i}, entries in row i reduced to
// exponents < a_i. The form is unique, so lattice equality is matrix equality.
class Lattice {
 public:
  Lattice() = default;
  static Lattice standard(const LocalField& F, int n);
  // Lattice spanned by the columns; must be invertible.
  static Lattice from_columns(const LocalMatrix& g);

  const LocalField& field() const { return basis_.field(); }
  int rank() const { return basis_.size(); }
  const LocalMatrix& basis() const { return basis_; }
  const std::vector<int>& diag_exponents() const { return diag_; }
  int det_valuation() const;

  Lattice apply(const LocalMatrix& g) const;  // g . L
  Lattice scaled_t(int k) const;              // t^k L
  Lattice normalized() const;                 // t^Z representative, det val in [0, n)

  bool operator==(const Lattice& o) const;
  bool contains(const Lattice& o) const;  // o subset of this
  std::string str() const;

 private:
  LocalMatrix basis_;
  std::vector<int> diag_;
};

// Column Hermite normal form of an invertible matrix; also returns the
// diagonal exponents. Entries of the result are exact Laurent polynomials.
LocalMatrix hermite_columns(const LocalMatrix& g, std::vector<int>* diag_out);

// Elementary-divisor exponents of an invertible matrix over O (Smith form),
// sorted descending.
std::vector<int> smith_exponents(const LocalMatrix& g);

// Dominant coweight lambda with M = L . diag(t^lambda) up to GL_n(O).
Coweight relative_position(const Lattice& L, const Lattice& M);

// Basis of the lattice {c in F^n : B c integral}, B of size N x n with
// linearly independent columns. Returned as an n x n column basis in Hermite
// form.
LocalMatrix integrality_solution_lattice(const std::vector<std::vector<SeriesScalar>>& B,
                                         const LocalField& F, int n);

}  // namespace hecke
