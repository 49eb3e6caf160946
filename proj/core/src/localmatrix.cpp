#include "hecke/localmatrix.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

LocalMatrix::LocalMatrix(const LocalField& F, int n) : F_(F), n_(n) {
  if (n < 1) throw input_error("matrix size must be positive");
  e_.assign(static_cast<size_t>(n) * n, SeriesScalar::zero(F));
}

LocalMatrix LocalMatrix::identity(const LocalField& F, int n) {
  LocalMatrix m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SeriesScalar::one(F);
  return m;
}

LocalMatrix LocalMatrix::scalar(const LocalField& F, int n, const SeriesScalar& c) {
  LocalMatrix m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

LocalMatrix LocalMatrix::diagonal_t(const LocalField& F, const std::vector<int>& exponents) {
  LocalMatrix m(F, static_cast<int>(exponents.size()));
  for (size_t i = 0; i < exponents.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = SeriesScalar::t_power(F, exponents[i]);
  return m;
}

LocalMatrix LocalMatrix::companion(const LocalField& F,
                                   const std::vector<SeriesScalar>& low_coeffs) {
  const int n = static_cast<int>(low_coeffs.size());
  LocalMatrix m(F, n);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = SeriesScalar::one(F);
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = -low_coeffs[i];
  return m;
}

LocalMatrix LocalMatrix::operator+(const LocalMatrix& o) const {
  if (n_ != o.n_ || !F_.same_field(o.F_)) throw input_error("matrix shape or field mismatch");
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

LocalMatrix LocalMatrix::operator-(const LocalMatrix& o) const {
  if (n_ != o.n_ || !F_.same_field(o.F_)) throw input_error("matrix shape or field mismatch");
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
  if (n_ != o.n_ || !F_.same_field(o.F_)) throw input_error("matrix shape or field mismatch");
  LocalMatrix m(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      SeriesScalar acc = at(i, 0) * o.at(0, j);
      for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
      m.at(i, j) = acc;
    }
  return m;
}

LocalMatrix LocalMatrix::scaled(const SeriesScalar& c) const {
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

LocalMatrix LocalMatrix::transpose() const {
  LocalMatrix m(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

SeriesScalar LocalMatrix::trace() const {
  SeriesScalar acc = at(0, 0);
  for (int i = 1; i < n_; ++i) acc = acc + at(i, i);
  return acc;
}

namespace {

// Cofactor expansion along the first remaining row; rows/cols are index lists.
SeriesScalar det_rec(const LocalMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  const int r0 = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  SeriesScalar acc = SeriesScalar::zero(m.field());
  for (size_t j = 0; j < k; ++j) {
    const SeriesScalar& piv = m.at(r0, cols[j]);
    if (piv.is_zero() && piv.exact()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (size_t l = 0; l < k; ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    SeriesScalar term = piv * det_rec(m, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

SeriesScalar LocalMatrix::det() const {
  std::vector<int> rows(n_), cols(n_);
  for (int i = 0; i < n_; ++i) rows[i] = cols[i] = i;
  return det_rec(*this, rows, cols);
}

std::vector<SeriesScalar> LocalMatrix::charpoly() const {
  // X^n - e_1 X^{n-1} + e_2 X^{n-2} - ... with e_k = sum of k x k principal minors.
  std::vector<SeriesScalar> c(static_cast<size_t>(n_) + 1, SeriesScalar::zero(F_));
  c[n_] = SeriesScalar::one(F_);
  for (int k = 1; k <= n_; ++k) {
    SeriesScalar ek = SeriesScalar::zero(F_);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> rows = idx, cols = idx;
      ek = ek + det_rec(*this, rows, cols);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n_ - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    c[n_ - k] = (k % 2 == 1) ? -ek : ek;
  }
  return c;
}

LocalMatrix LocalMatrix::inverse() const {
  const SeriesScalar d = det();
  if (d.is_zero()) {
    if (d.exact()) throw input_error("matrix is singular");
    throw precision_error("matrix determinant is zero to precision " + std::to_string(d.cap()));
  }
  const SeriesScalar dinv = d.inverse();
  LocalMatrix inv(F_, n_);
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  if (n_ == 1) {
    inv.at(0, 0) = dinv;
    return inv;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n_; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      SeriesScalar minor = det_rec(*this, rows, cols);
      if ((i + j) % 2 == 1) minor = -minor;
      inv.at(j, i) = minor * dinv;
    }
  return inv;
}

LocalMatrix LocalMatrix::frobenius() const {
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].frobenius();
  return m;
}

LocalMatrix LocalMatrix::frobenius_power(int k) const {
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].frobenius_power(k);
  return m;
}

LocalMatrix LocalMatrix::truncated(int cap) const {
  LocalMatrix m(F_, n_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].truncated(cap);
  return m;
}

bool LocalMatrix::matches(const LocalMatrix& o) const {
  if (n_ != o.n_ || !F_.same_field(o.F_)) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].matches(o.e_[i])) return false;
  return true;
}

bool LocalMatrix::is_integral() const {
  for (const SeriesScalar& x : e_) {
    if (x.known_nonzero()) {
      if (x.valuation() < 0) return false;
    } else if (!x.exact() && x.cap() < 0) {
      throw precision_error("integrality undecidable: entry known only to t^" +
                            std::to_string(x.cap()));
    }
  }
  return true;
}

std::string LocalMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

LocalMatrix norm_map(const LocalMatrix& d, int r) {
  if (r < 1) throw input_error("extension degree must be at least 1");
  const SeriesScalar dd = d.det();
  if (dd.is_zero()) {
    if (dd.exact()) throw input_error("matrix is singular");
    throw precision_error("matrix determinant is zero to precision " + std::to_string(dd.cap()));
  }
  LocalMatrix acc = d;
  for (int k = 1; k < r; ++k) acc = acc * d.frobenius_power(k);
  return acc;
}

namespace {

// Degree after trimming exact-zero leading coefficients; -1 for exact zero.
// A leading coefficient that is zero only to precision blocks the decision.
int certified_degree(const std::vector<SeriesScalar>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i].known_nonzero()) return i;
    if (!a[i].exact())
      throw precision_error("polynomial degree undecidable at precision " +
                            std::to_string(a[i].cap()));
  }
  return -1;
}

}  // namespace

SeriesScalar poly_resultant(const std::vector<SeriesScalar>& a, const std::vector<SeriesScalar>& b) {
  if (a.empty() || b.empty()) throw input_error("resultant of an empty polynomial");
  const LocalField& F = a[0].field();
  const int m = certified_degree(a);
  const int d = certified_degree(b);
  if (m < 0 || d < 0) return SeriesScalar::zero(F);
  if (m == 0 && d == 0) return SeriesScalar::one(F);
  const int s = m + d;
  LocalMatrix syl(F, s);
  for (int row = 0; row < d; ++row)
    for (int k = 0; k <= m; ++k) syl.at(row, row + m - k) = a[k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= d; ++k) syl.at(d + row, row + d - k) = b[k];
  return syl.det();
}

LocalMatrix poly_eval(const std::vector<SeriesScalar>& coeffs, const LocalMatrix& g) {
  const LocalField& F = g.field();
  LocalMatrix acc(F, g.size());
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    acc = acc * g + LocalMatrix::scalar(F, g.size(), coeffs[i]);
  return acc;
}

bool is_regular_ss_separable(const LocalMatrix& g) {
  const LocalField& F = g.field();
  const std::vector<SeriesScalar> P = g.charpoly();
  std::vector<SeriesScalar> dP;
  for (size_t i = 1; i < P.size(); ++i)
    dP.push_back(P[i] * SeriesScalar::from_int(F, static_cast<long>(i)));
  if (certified_degree(dP) < 0) return false;
  const SeriesScalar res = poly_resultant(P, dP);
  if (res.known_nonzero()) return true;
  if (res.exact()) return false;
  throw precision_error("separability resultant is zero to precision " +
                        std::to_string(res.cap()) + "; raise the working precision");
}

}  // namespace hecke
