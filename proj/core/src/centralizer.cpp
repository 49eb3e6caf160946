#include "hecke/centralizer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool entry_integral(const SeriesScalar& s) {
  if (s.known_nonzero()) return s.valuation() >= 0;
  if (!s.exact() && s.cap() < 0)
    throw precision_error("integrality of a zero-to-precision entry with cap " +
                          std::to_string(s.cap()));
  return true;
}

std::vector<SeriesScalar> mat_vec(const LocalMatrix& m,
                                  const std::vector<SeriesScalar>& v) {
  const int n = m.size();
  std::vector<SeriesScalar> out(n, SeriesScalar::zero(m.field()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] = out[i] + m.at(i, j) * v[j];
  return out;
}

bool vector_in_lattice(const Lattice& L, const std::vector<SeriesScalar>& v) {
  std::vector<SeriesScalar> c = mat_vec(L.basis().inverse(), v);
  for (const SeriesScalar& e : c)
    if (!entry_integral(e)) return false;
  return true;
}

// Residue-coefficient lift: index in [0, q) as an exact constant.
SeriesScalar lift_residue(const LocalField& F, long idx) {
  return SeriesScalar::monomial(F, idx, 0);
}

// Coordinates of big-field elements over the power basis {x^j} of the
// degree-r extension, x the polynomial generator of the big field.
const std::vector<std::vector<long>>& power_basis_coords(long q, int r) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::vector<std::vector<long>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({q, r});
  if (it != cache.end()) return it->second;

  GFPtr sub = gf_table(q);
  long big_size = 1;
  for (int j = 0; j < r; ++j) big_size *= q;
  GFPtr big = gf_table(big_size);
  GFEmbedding emb(sub, big);
  const long x = big->characteristic();  // the class of X

  std::vector<std::vector<long>> table(big_size);
  std::vector<long> seen(big_size, 0);
  std::vector<long> tuple(r, 0);
  for (long count = 0; count < big_size; ++count) {
    long val = 0;
    for (int j = 0; j < r; ++j)
      val = big->add(val, big->mul(emb.embed(tuple[j]), big->pow(x, j)));
    if (seen[val]) throw consistency_error("power basis is degenerate");
    seen[val] = 1;
    table[val] = tuple;
    for (int j = 0; j < r; ++j) {
      if (++tuple[j] < q) break;
      tuple[j] = 0;
    }
  }
  return cache.emplace(std::pair<long, int>{q, r}, std::move(table))
      .first->second;
}

}  // namespace

std::vector<SeriesScalar> series_components(const SeriesScalar& s) {
  const LocalField& E = s.field();
  if (E.r == 1) return {s};
  const LocalField F = E.base();
  const auto& coords = power_basis_coords(E.q, E.r);

  if (s.is_zero()) {
    std::vector<SeriesScalar> out;
    for (int j = 0; j < E.r; ++j)
      out.push_back(s.exact() ? SeriesScalar::zero(F)
                              : SeriesScalar::zero_to(F, s.cap()));
    return out;
  }
  const int lo = s.valuation();
  const int hi = s.top_exponent();
  std::vector<std::vector<long>> comp(E.r, std::vector<long>(hi - lo + 1, 0));
  for (int e = lo; e <= hi; ++e) {
    const auto& c = coords[s.coeff(e)];
    for (int j = 0; j < E.r; ++j) comp[j][e - lo] = c[j];
  }
  std::vector<SeriesScalar> out;
  for (int j = 0; j < E.r; ++j) {
    SeriesScalar part = SeriesScalar::from_poly(F, lo, comp[j]);
    out.push_back(s.exact() ? part : part.truncated(s.cap()));
  }
  return out;
}

Lattice lattice_span(const LocalField& F, int n,
                     const std::vector<std::vector<SeriesScalar>>& cols) {
  std::vector<std::vector<SeriesScalar>> work = cols;
  for (auto& c : work)
    if (static_cast<int>(c.size()) != n) throw input_error("column size mismatch");
  std::vector<std::vector<SeriesScalar>> pivots;

  for (int row = n - 1; row >= 0; --row) {
    int best = -1;
    int bestval = 0;
    for (size_t j = 0; j < work.size(); ++j) {
      const SeriesScalar& e = work[j][row];
      if (!e.known_nonzero()) {
        if (!e.exact() && e.cap() <= 0)
          throw precision_error("span pivot search hit a zero-to-precision entry");
        continue;
      }
      int v = e.valuation();
      if (best < 0 || v < bestval) {
        best = static_cast<int>(j);
        bestval = v;
      }
    }
    if (best < 0) throw consistency_error("spanning set is not full rank");
    std::vector<SeriesScalar> piv = work[best];
    work.erase(work.begin() + best);
    for (auto& col : work) {
      const SeriesScalar& e = col[row];
      if (!e.known_nonzero()) {
        col[row] = SeriesScalar::zero(F);
        continue;
      }
      SeriesScalar factor = e * piv[row].inverse();
      for (int i = 0; i <= row; ++i) col[i] = col[i] - factor * piv[i];
      // The pivot-row entry cancels identically; commit the exact zero.
      col[row] = SeriesScalar::zero(F);
    }
    pivots.push_back(std::move(piv));
  }

  LocalMatrix b(F, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) b.at(i, j) = pivots[n - 1 - j][i];
  return Lattice::from_columns(b);
}

Lattice lattice_intersection(const Lattice& L, const Lattice& M) {
  const int n = L.rank();
  LocalMatrix rel = M.basis().inverse() * L.basis();
  std::vector<std::vector<SeriesScalar>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<SeriesScalar> row;
    for (int j = 0; j < n; ++j) row.push_back(rel.at(i, j));
    rows.push_back(std::move(row));
  }
  LocalMatrix sol = integrality_solution_lattice(rows, L.field(), n);
  return Lattice::from_columns(L.basis() * sol);
}

CentralizerAlgebra::CentralizerAlgebra(const LocalField& F,
                                       std::vector<SeriesScalar> low_coeffs)
    : F_(F), n_(static_cast<int>(low_coeffs.size())), cp_(std::move(low_coeffs)) {
  if (F_.r != 1) throw input_error("coordinate algebra wants a ground-field context");
  if (n_ < 1) throw input_error("empty characteristic polynomial");
  for (const SeriesScalar& c : cp_)
    if (!c.field().same_field(F_)) throw input_error("coefficient field mismatch");
  companion_ = LocalMatrix::companion(F_, cp_);
  LocalMatrix p = LocalMatrix::identity(F_, n_);
  for (int i = 0; i < n_; ++i) {
    powers_.push_back(p);
    p = p * companion_;
  }

  reference_ = coefficient_integrality_lattice({powers_});

  // Integral closure by saturation: a residue-coset representative of
  // t^{-1} R / R with integral norm enlarges R to the order it generates.
  maximal_ = reference_;
  for (int round = 0; round < 500; ++round) {
    bool grew = false;
    std::vector<long> digits(n_, 0);
    long total = 1;
    for (int i = 0; i < n_; ++i) total *= F_.q;
    for (long it = 1; it < total && !grew; ++it) {
      for (int i = 0; i < n_; ++i) {
        if (++digits[i] < F_.q) break;
        digits[i] = 0;
      }
      std::vector<SeriesScalar> x(n_, SeriesScalar::zero(F_));
      for (int i = 0; i < n_; ++i)
        for (int b = 0; b < n_; ++b)
          x[i] = x[i] + maximal_.basis().at(i, b) * lift_residue(F_, digits[b]);
      for (int i = 0; i < n_; ++i) x[i] = x[i].shifted(-1);
      if (norm_valuation(x) < 0) continue;
      std::vector<std::vector<SeriesScalar>> cols;
      LocalMatrix mx = mult_matrix(x);
      LocalMatrix pw = LocalMatrix::identity(F_, n_);
      for (int j = 0; j < n_; ++j) {
        for (int b = 0; b < n_; ++b) {
          std::vector<SeriesScalar> col(n_, SeriesScalar::zero(F_));
          for (int i = 0; i < n_; ++i) col[i] = maximal_.basis().at(i, b);
          cols.push_back(mat_vec(pw, col));
        }
        pw = pw * mx;
      }
      Lattice bigger = lattice_span(F_, n_, cols);
      if (!(bigger == maximal_)) {
        maximal_ = bigger;
        grew = true;
      }
    }
    if (!grew) break;
    if (round == 499) throw consistency_error("integral closure failed to stabilize");
  }

  // Uniformizer search over nonzero residues of the maximal order: the
  // minimal positive norm valuation is the residue degree; no positive value
  // means the unramified case.
  int best_f = 0;
  std::vector<std::vector<SeriesScalar>> ideal_cols;
  for (int b = 0; b < n_; ++b) {
    std::vector<SeriesScalar> col(n_, SeriesScalar::zero(F_));
    for (int i = 0; i < n_; ++i) col[i] = maximal_.basis().at(i, b).shifted(1);
    ideal_cols.push_back(std::move(col));
  }
  {
    std::vector<long> digits(n_, 0);
    long total = 1;
    for (int i = 0; i < n_; ++i) total *= F_.q;
    for (long it = 1; it < total; ++it) {
      for (int i = 0; i < n_; ++i) {
        if (++digits[i] < F_.q) break;
        digits[i] = 0;
      }
      std::vector<SeriesScalar> y(n_, SeriesScalar::zero(F_));
      for (int i = 0; i < n_; ++i)
        for (int b = 0; b < n_; ++b)
          y[i] = y[i] + maximal_.basis().at(i, b) * lift_residue(F_, digits[b]);
      int v = norm_valuation(y);
      if (v <= 0) continue;
      ideal_cols.push_back(std::move(y));
      if (best_f == 0 || v < best_f) best_f = v;
    }
  }
  res_f_ = best_f == 0 ? n_ : best_f;
  if (n_ % res_f_ != 0)
    throw consistency_error("residue degree " + std::to_string(res_f_) +
                            " does not divide " + std::to_string(n_));
  maximal_ideal_ = lattice_span(F_, n_, ideal_cols);
}

LocalMatrix CentralizerAlgebra::mult_matrix(const std::vector<SeriesScalar>& c) const {
  if (static_cast<int>(c.size()) != n_) throw input_error("coordinate size mismatch");
  LocalMatrix out(F_, n_);
  for (int i = 0; i < n_; ++i) out = out + powers_[i].scaled(c[i]);
  return out;
}

int CentralizerAlgebra::norm_valuation(const std::vector<SeriesScalar>& c) const {
  return mult_matrix(c).det().valuation();
}

int CentralizerAlgebra::min_norm_valuation(const Lattice& L) const {
  int best = 0;
  for (int b = 0; b < n_; ++b) {
    std::vector<SeriesScalar> col(n_, SeriesScalar::zero(F_));
    for (int i = 0; i < n_; ++i) col[i] = L.basis().at(i, b);
    int v = norm_valuation(col);
    if (b == 0 || v < best) best = v;
  }
  return best;
}

Lattice CentralizerAlgebra::coefficient_integrality_lattice(
    const std::vector<std::vector<LocalMatrix>>& condition_blocks) const {
  std::vector<std::vector<SeriesScalar>> rows;
  for (const auto& block : condition_blocks) {
    if (static_cast<int>(block.size()) != n_)
      throw input_error("condition block wants one matrix per basis power");
    const LocalField& bf = block[0].field();
    if (bf.q != F_.q) throw input_error("condition block over a foreign field");
    const int m = block[0].size();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (bf.r == 1) {
          std::vector<SeriesScalar> row;
          for (int j = 0; j < n_; ++j) row.push_back(block[j].at(a, b));
          rows.push_back(std::move(row));
        } else {
          std::vector<std::vector<SeriesScalar>> split;
          for (int j = 0; j < n_; ++j)
            split.push_back(series_components(block[j].at(a, b)));
          for (int comp = 0; comp < bf.r; ++comp) {
            std::vector<SeriesScalar> row;
            for (int j = 0; j < n_; ++j) row.push_back(split[j][comp]);
            rows.push_back(std::move(row));
          }
        }
      }
  }
  return Lattice::from_columns(integrality_solution_lattice(rows, F_, n_));
}

int CentralizerAlgebra::order_level(const Lattice& R) const {
  for (int c = 1; c <= 500; ++c)
    if (R.contains(maximal_.scaled_t(c))) return c;
  throw consistency_error("order level exceeds 500");
}

void CentralizerAlgebra::check_order(const Lattice& R) const {
  std::vector<SeriesScalar> one(n_, SeriesScalar::zero(F_));
  one[0] = SeriesScalar::one(F_);
  if (!vector_in_lattice(R, one)) throw input_error("lattice misses the unit");
  std::vector<std::vector<SeriesScalar>> cols(n_);
  for (int b = 0; b < n_; ++b) {
    cols[b].assign(n_, SeriesScalar::zero(F_));
    for (int i = 0; i < n_; ++i) cols[b][i] = R.basis().at(i, b);
  }
  for (int a = 0; a < n_; ++a) {
    LocalMatrix ma = mult_matrix(cols[a]);
    for (int b = a; b < n_; ++b)
      if (!vector_in_lattice(R, mat_vec(ma, cols[b])))
        throw input_error("lattice is not multiplicatively closed");
  }
}

std::pair<LaurentScalar, LaurentScalar> CentralizerAlgebra::unit_volume(
    const Lattice& R) const {
  check_order(R);
  const int c = std::max(order_level(R), order_level(reference_));
  const Lattice deep = maximal_.scaled_t(c);
  const int i1 = deep.det_valuation() - R.det_valuation();
  const int i2 = deep.det_valuation() -
                 lattice_intersection(R, maximal_ideal_).det_valuation();
  const int i3 = deep.det_valuation() - reference_.det_valuation();
  const int i4 = deep.det_valuation() -
                 lattice_intersection(reference_, maximal_ideal_).det_valuation();
  return {q_power(i1) - q_power(i2), q_power(i3) - q_power(i4)};
}

}  // namespace hecke
