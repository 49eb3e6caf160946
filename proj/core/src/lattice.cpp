#include "hecke/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr int kInfVal = std::numeric_limits<int>::max() / 2;

// Valuation for pivot contests.  Exact zeros rank +inf and never win.  A
// zero-to-precision entry also ranks +inf but lowers *floor_unknown to its
// cap: a hidden coefficient at or past the cap is still possible, so the
// caller must reject the scan when the floor does not clear the winner.
int pivot_valuation(const SeriesScalar& x, int* floor_unknown) {
  if (x.known_nonzero()) return x.valuation();
  if (!x.exact()) *floor_unknown = std::min(*floor_unknown, x.cap());
  return kInfVal;
}

void require_rankable(int bestv, int floor_unknown) {
  if (floor_unknown < bestv)
    throw precision_error("pivot entry is zero to precision " + std::to_string(floor_unknown) +
                          "; raise the working precision");
}

// The part of x with exponents >= a, divided by t^a.
SeriesScalar quotient_above(const SeriesScalar& x, int a) {
  return (x - x.polynomial_below(a)).shifted(-a);
}

void swap_columns(LocalMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.size(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

LocalMatrix hermite_columns(const LocalMatrix& g, std::vector<int>* diag_out) {
  const LocalField& F = g.field();
  const int n = g.size();
  LocalMatrix m = g;
  std::vector<int> diag(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    int bestv = kInfVal;
    int floor_unknown = kInfVal;
    for (int j = 0; j <= i; ++j) {
      const int v = pivot_valuation(m.at(i, j), &floor_unknown);
      if (v < bestv) {
        bestv = v;
        best = j;
      }
    }
    require_rankable(bestv, floor_unknown);
    if (best < 0) throw input_error("columns do not span a full-rank lattice");
    swap_columns(m, best, i);
    diag[i] = bestv;
    const SeriesScalar unit_inv = m.at(i, i).shifted(-bestv).inverse();
    for (int row = 0; row <= i; ++row) m.at(row, i) = m.at(row, i) * unit_inv;
    if (!m.at(i, i).matches(SeriesScalar::t_power(F, bestv)))
      throw consistency_error("pivot normalization failed");
    m.at(i, i) = SeriesScalar::t_power(F, bestv);
    for (int j = 0; j < i; ++j) {
      const SeriesScalar f = m.at(i, j).shifted(-bestv);
      for (int row = 0; row < i; ++row) m.at(row, j) = m.at(row, j) - f * m.at(row, i);
      m.at(i, j) = SeriesScalar::zero(F);
    }
  }
  for (int j = 1; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      const SeriesScalar x = quotient_above(m.at(i, j), diag[i]);
      if (x.is_zero() && x.exact()) continue;
      for (int row = 0; row <= i; ++row) m.at(row, j) = m.at(row, j) - x * m.at(row, i);
    }
  // Commit the unique reduced form exactly; every coefficient read here is
  // inside its precision cap or polynomial_below aborts.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i > j)
        m.at(i, j) = SeriesScalar::zero(F);
      else if (i < j)
        m.at(i, j) = m.at(i, j).polynomial_below(diag[i]);
    }
  if (diag_out) *diag_out = diag;
  return m;
}

Lattice Lattice::standard(const LocalField& F, int n) {
  Lattice L;
  L.basis_ = LocalMatrix::identity(F, n);
  L.diag_.assign(n, 0);
  return L;
}

Lattice Lattice::from_columns(const LocalMatrix& g) {
  const SeriesScalar d = g.det();
  if (d.is_zero()) {
    if (d.exact()) throw input_error("singular basis matrix");
    throw precision_error("basis determinant is zero to precision " + std::to_string(d.cap()));
  }
  Lattice L;
  L.basis_ = hermite_columns(g, &L.diag_);
  return L;
}

int Lattice::det_valuation() const {
  int s = 0;
  for (int a : diag_) s += a;
  return s;
}

Lattice Lattice::apply(const LocalMatrix& g) const { return from_columns(g * basis_); }

Lattice Lattice::scaled_t(int k) const {
  Lattice L;
  L.basis_ = basis_;
  L.diag_ = diag_;
  for (int j = 0; j < basis_.size(); ++j) {
    L.diag_[j] += k;
    for (int i = 0; i < basis_.size(); ++i) L.basis_.at(i, j) = L.basis_.at(i, j).shifted(k);
  }
  return L;
}

Lattice Lattice::normalized() const {
  const int n = rank();
  const int s = det_valuation();
  int q = s / n;
  if (s % n != 0 && s < 0) --q;
  return scaled_t(-q);
}

bool Lattice::operator==(const Lattice& o) const {
  return diag_ == o.diag_ && basis_.matches(o.basis_);
}

bool Lattice::contains(const Lattice& o) const {
  return (basis_.inverse() * o.basis_).is_integral();
}

std::string Lattice::str() const { return basis_.str(); }

std::vector<int> smith_exponents(const LocalMatrix& g) {
  const LocalField& F = g.field();
  const int n = g.size();
  LocalMatrix m = g;
  std::vector<int> exps;
  for (int k = 0; k < n; ++k) {
    int bi = -1, bj = -1, bestv = kInfVal;
    int floor_unknown = kInfVal;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        const int v = pivot_valuation(m.at(i, j), &floor_unknown);
        if (v < bestv) {
          bestv = v;
          bi = i;
          bj = j;
        }
      }
    require_rankable(bestv, floor_unknown);
    if (bi < 0) throw input_error("matrix is singular over the valuation ring");
    if (bi != k)
      for (int j = 0; j < n; ++j) std::swap(m.at(bi, j), m.at(k, j));
    swap_columns(m, bj, k);
    const SeriesScalar piv_inv = m.at(k, k).inverse();
    for (int j = k + 1; j < n; ++j) {
      const SeriesScalar f = m.at(k, j) * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int i = k; i < n; ++i) m.at(i, j) = m.at(i, j) - f * m.at(i, k);
    }
    for (int i = k + 1; i < n; ++i) {
      const SeriesScalar f = m.at(i, k) * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
    exps.push_back(bestv);
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

Coweight relative_position(const Lattice& L, const Lattice& M) {
  if (L.rank() != M.rank() || !L.field().same_field(M.field()))
    throw input_error("lattice rank or field mismatch");
  const LocalMatrix A = L.basis().inverse() * M.basis();
  return smith_exponents(A);
}

LocalMatrix integrality_solution_lattice(const std::vector<std::vector<SeriesScalar>>& B,
                                         const LocalField& F, int n) {
  const int N = static_cast<int>(B.size());
  if (N < n) throw input_error("constraint matrix has too few rows");
  std::vector<std::vector<SeriesScalar>> m = B;
  LocalMatrix C = LocalMatrix::identity(F, n);
  std::vector<bool> row_used(N, false);
  std::vector<int> dvals;
  for (int k = 0; k < n; ++k) {
    int bi = -1, bj = -1, bestv = kInfVal;
    int floor_unknown = kInfVal;
    for (int i = 0; i < N; ++i) {
      if (row_used[i]) continue;
      for (int j = k; j < n; ++j) {
        const int v = pivot_valuation(m[i][j], &floor_unknown);
        if (v < bestv) {
          bestv = v;
          bi = i;
          bj = j;
        }
      }
    }
    require_rankable(bestv, floor_unknown);
    if (bi < 0) throw input_error("constraint columns are linearly dependent");
    if (bj != k) {
      for (int i = 0; i < N; ++i) std::swap(m[i][bj], m[i][k]);
      swap_columns(C, bj, k);
    }
    const SeriesScalar piv_inv = m[bi][k].inverse();
    // Row operations clear column k; they do not touch the column transform.
    for (int i = 0; i < N; ++i) {
      if (i == bi || row_used[i]) continue;
      const SeriesScalar f = m[i][k] * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[bi][j];
    }
    // Column operations clear the pivot row and are mirrored on C.
    for (int j = k + 1; j < n; ++j) {
      const SeriesScalar f = m[bi][j] * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int i = 0; i < N; ++i) m[i][j] = m[i][j] - f * m[i][k];
      for (int i = 0; i < n; ++i) C.at(i, j) = C.at(i, j) - f * C.at(i, k);
    }
    row_used[bi] = true;
    dvals.push_back(bestv);
  }
  LocalMatrix basis(F, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = C.at(i, j).shifted(-dvals[j]);
  return hermite_columns(basis, nullptr);
}

}  // namespace hecke
