#pragma once

#include <utility>
#include <vector>

#include "hecke/lattice.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// Lattice spanned by an arbitrary generating set of columns (must have full
// rank n); valuation-pivot elimination, exact polynomial result.
Lattice lattice_span(const LocalField& F, int n,
                     const std::vector<std::vector<SeriesScalar>>& cols);

Lattice lattice_intersection(const Lattice& L, const Lattice& M);

// Components of a series over the degree-r extension with respect to the
// power basis of the extension's residue field over the base residue field;
// returns r series over the base field.
std::vector<SeriesScalar> series_components(const SeriesScalar& s);

// The field F[X]/(P) of an irreducible separable monic P of degree n, in the
// coordinate space of X-powers. Carries the reference order (the elements
// whose companion image is integral, unit volume 1), the maximal order, its
// maximal ideal, and the ramification data; every quantity is exact.
class CentralizerAlgebra {
 public:
  // low_coeffs = c_0..c_{n-1} of P = X^n + c_{n-1} X^{n-1} + ... + c_0,
  // entries over the base field (r = 1 context).
  CentralizerAlgebra(const LocalField& F, std::vector<SeriesScalar> low_coeffs);

  int degree() const { return n_; }
  const LocalField& base_field() const { return F_; }
  const std::vector<SeriesScalar>& charpoly() const { return cp_; }
  const LocalMatrix& companion() const { return companion_; }
  const Lattice& reference_order() const { return reference_; }
  const Lattice& maximal_order() const { return maximal_; }
  const Lattice& maximal_ideal() const { return maximal_ideal_; }
  // val Nm of a uniformizer = residue degree f; e = n / f.
  int residue_degree() const { return res_f_; }
  int ramification_index() const { return n_ / res_f_; }

  // Matrix of multiplication by the coordinate vector c.
  LocalMatrix mult_matrix(const std::vector<SeriesScalar>& c) const;
  // val_t(Nm(c)); throws input_error on the zero vector.
  int norm_valuation(const std::vector<SeriesScalar>& c) const;
  // Minimum of norm_valuation over the lattice: the ultrametric makes the
  // minimum over any basis exact.
  int min_norm_valuation(const Lattice& L) const;

  // {c : sum_j c_j A_j integral} for each condition block A = (A_0..A_{n-1});
  // blocks over a degree-r extension are split into base components first.
  Lattice coefficient_integrality_lattice(
      const std::vector<std::vector<LocalMatrix>>& condition_blocks) const;

  // vol(R^x) as an exact fraction in q, normalized by vol(reference^x) = 1.
  // R must be an order (checked: contains 1, closed under multiplication).
  std::pair<LaurentScalar, LaurentScalar> unit_volume(const Lattice& R) const;

 private:
  int order_level(const Lattice& R) const;  // min c >= 1, t^c maximal in R
  void check_order(const Lattice& R) const;

  LocalField F_;
  int n_ = 0;
  std::vector<SeriesScalar> cp_;
  LocalMatrix companion_;
  std::vector<LocalMatrix> powers_;  // companion^0 .. companion^{n-1}
  Lattice reference_;
  Lattice maximal_;
  Lattice maximal_ideal_;
  int res_f_ = 0;
};

}  // namespace hecke
