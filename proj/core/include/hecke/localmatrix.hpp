#pragma once

#include <string>
#include <vector>

#include "hecke/series.hpp"

namespace hecke {

// Square matrix over SeriesScalar. Column-major convention for lattice bases:
// column j is the j-th basis vector.
class LocalMatrix {
 public:
  LocalMatrix() = default;
  LocalMatrix(const LocalField& F, int n);
  static LocalMatrix identity(const LocalField& F, int n);
  static LocalMatrix scalar(const LocalField& F, int n, const SeriesScalar& c);
  static LocalMatrix diagonal_t(const LocalField& F, const std::vector<int>& exponents);
  // Companion matrix of X^n + a_{n-1} X^{n-1} + ... + a_0 (monic, coeffs low first).
  static LocalMatrix companion(const LocalField& F, const std::vector<SeriesScalar>& low_coeffs);

  const LocalField& field() const { return F_; }
  int size() const { return n_; }
  const SeriesScalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  SeriesScalar& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

  LocalMatrix operator+(const LocalMatrix& o) const;
  LocalMatrix operator-(const LocalMatrix& o) const;
  LocalMatrix operator*(const LocalMatrix& o) const;
  LocalMatrix scaled(const SeriesScalar& c) const;
  LocalMatrix transpose() const;

  SeriesScalar trace() const;
  SeriesScalar det() const;
  // Characteristic polynomial coefficients low-first, length n+1, monic.
  std::vector<SeriesScalar> charpoly() const;
  LocalMatrix inverse() const;  // adjugate over det; throws on zero-to-precision det

  LocalMatrix frobenius() const;
  LocalMatrix frobenius_power(int k) const;
  LocalMatrix truncated(int cap) const;
  bool matches(const LocalMatrix& o) const;
  // Every entry has nonnegative valuation (integral over the valuation ring).
  bool is_integral() const;

  std::string str() const;

 private:
  LocalField F_;
  int n_ = 0;
  std::vector<SeriesScalar> e_;
};

// Nm(d) = d * sigma(d) * ... * sigma^{r-1}(d) over E = F_{q^r}((t)).
LocalMatrix norm_map(const LocalMatrix& d, int r);

// True iff the characteristic polynomial has pairwise distinct roots in a
// separable closure: nonzero derivative and nonvanishing resultant
// res(P, P'), certified by an explicit valuation below the precision cap.
bool is_regular_ss_separable(const LocalMatrix& g);

// Resultant of two polynomials over SeriesScalar (coefficients low-first).
SeriesScalar poly_resultant(const std::vector<SeriesScalar>& a,
                            const std::vector<SeriesScalar>& b);

// Evaluate a polynomial (coefficients low-first) at a matrix argument.
LocalMatrix poly_eval(const std::vector<SeriesScalar>& coeffs, const LocalMatrix& g);

}  // namespace hecke
