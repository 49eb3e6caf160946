#include "hecke/symlaurent.hpp"

#include <sstream>

namespace hecke {

LaurentScalar SymLaurent::coeff(const Coweight& m) const {
  if (static_cast<int>(m.size()) != rank_)
    throw input_error("SymLaurent::coeff: rank mismatch");
  auto it = terms_.find(dominant_sort(m));
  return it == terms_.end() ? LaurentScalar{} : it->second;
}

void SymLaurent::set_coeff(const Coweight& dominant, const LaurentScalar& c) {
  if (static_cast<int>(dominant.size()) != rank_)
    throw input_error("SymLaurent::set_coeff: rank mismatch");
  if (!is_dominant(dominant))
    throw input_error("SymLaurent::set_coeff: key must be dominant");
  if (c.is_zero())
    terms_.erase(dominant);
  else
    terms_[dominant] = c;
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
  if (rank_ != o.rank_) throw input_error("SymLaurent: rank mismatch");
  for (const auto& [m, c] : o.terms_) set_coeff(m, coeff(m) + c);
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
  if (rank_ != o.rank_) throw input_error("SymLaurent: rank mismatch");
  for (const auto& [m, c] : o.terms_) set_coeff(m, coeff(m) - c);
  return *this;
}

SymLaurent SymLaurent::operator*(const SymLaurent& o) const {
  if (rank_ != o.rank_) throw input_error("SymLaurent: rank mismatch");
  // Expand the smaller factor into plain monomials; for each monomial x^u of
  // the other factor's orbits, accumulate only dominant products to avoid
  // n!^2 blowup: (a * b)|_dominant determines the symmetric result.
  SymLaurent out(rank_);
  std::map<Coweight, LaurentScalar> acc;
  for (const auto& [m1, c1] : terms_) {
    for (const Coweight& u1 : coweight_orbit(m1)) {
      for (const auto& [m2, c2] : o.terms_) {
        for (const Coweight& u2 : coweight_orbit(m2)) {
          Coweight s = u1 + u2;
          if (!is_dominant(s)) continue;
          auto& slot = acc[s];
          slot += c1 * c2;
        }
      }
    }
  }
  // The dominant coefficient of the product of full orbits counts each
  // dominant monomial once per (u1, u2) pair; that IS the monomial
  // coefficient of x^s in the product, so no further normalization is due.
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_[m] = std::move(c);
  return out;
}

SymLaurent SymLaurent::operator*(const LaurentScalar& c) const {
  SymLaurent out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [m, t] : terms_) out.terms_[m] = t * c;
  return out;
}

SymLaurent SymLaurent::operator-() const {
  SymLaurent out(rank_);
  for (const auto& [m, t] : terms_) out.terms_[m] = -t;
  return out;
}

SymLaurent SymLaurent::substitute_power(int r) const {
  if (r <= 0) throw input_error("substitute_power: r must be positive");
  SymLaurent out(rank_);
  for (const auto& [m, c] : terms_) {
    Coweight mr = m;
    for (auto& x : mr) x *= r;
    out.terms_[mr] = c.stretch(r);
  }
  return out;
}

std::string SymLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c << ")*x^" << coweight_str(m);
    first = false;
  }
  return os.str();
}

SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }

std::ostream& operator<<(std::ostream& os, const SymLaurent& s) {
  return os << s.str();
}

namespace {

// Enumerate semistandard tableaux of partition shape, entries in 1..rank,
// accumulating x^content.  Rows are filled top to bottom, left to right;
// weak increase along rows, strict down columns.
void ssyt_fill(const std::vector<int>& shape, int rank,
               std::vector<std::vector<int>>& t, int r, int c,
               SymLaurent& out) {
  if (r == static_cast<int>(shape.size())) {
    Coweight content(rank, 0);
    for (const auto& row : t)
      for (int e : row) content[e - 1]++;
    // Contents within one S_n-orbit are equally frequent, so counting only
    // the dominant one yields the per-monomial coefficient.
    if (is_dominant(content))
      out.set_coeff(content, out.coeff(content) + LaurentScalar(1));
    return;
  }
  if (c == shape[r]) {
    ssyt_fill(shape, rank, t, r + 1, 0, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t[r][c - 1]);
  if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
  for (int e = lo; e <= rank; ++e) {
    t[r][c] = e;
    ssyt_fill(shape, rank, t, r, c + 1, out);
  }
}

}  // namespace

SymLaurent schur(int rank, const Coweight& m) {
  if (static_cast<int>(m.size()) != rank)
    throw input_error("schur: rank mismatch");
  if (!is_dominant(m)) throw input_error("schur: weight must be dominant");
  const int shift = m.back() < 0 ? m.back() : 0;
  std::vector<int> shape;
  for (int x : m)
    if (x - shift > 0) shape.push_back(x - shift);
  SymLaurent base(rank);
  if (shape.empty()) {
    base.set_coeff(Coweight(rank, 0), LaurentScalar(1));
  } else {
    std::vector<std::vector<int>> t;
    for (int len : shape) t.emplace_back(len, 0);
    ssyt_fill(shape, rank, t, 0, 0, base);
  }
  if (shift != 0) {
    // multiply by (x_1...x_n)^shift
    SymLaurent out(rank);
    for (const auto& [mm, c] : base.terms()) {
      Coweight k = mm;
      for (auto& x : k) x += shift;
      out.set_coeff(k, c);
    }
    return out;
  }
  return base;
}

SymLaurent monomial_sym(int rank, const Coweight& m) {
  if (static_cast<int>(m.size()) != rank)
    throw input_error("monomial_sym: rank mismatch");
  SymLaurent out(rank);
  out.set_coeff(dominant_sort(m), LaurentScalar(1));
  return out;
}

std::map<Coweight, LaurentScalar> expand_in_basis(const SymLaurent& s,
                                                  SymBasis basis) {
  std::map<Coweight, LaurentScalar> out;
  if (basis == SymBasis::monomial) {
    for (const auto& [m, c] : s.terms()) out[m] = c;
    return out;
  }
  // Schur expansion by triangular elimination: repeatedly strip a term that
  // is dominance-maximal within its degree block (blocks of different total
  // degree are incomparable, so any block order works).
  SymLaurent rem = s;
  while (!rem.is_zero()) {
    Coweight top = rem.terms().begin()->first;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [m, c] : rem.terms()) {
        (void)c;
        if (m != top && total(m) == total(top) && dominance_leq(top, m)) {
          top = m;
          grew = true;
        }
      }
    }
    LaurentScalar c = rem.coeff(top);
    out[top] = c;
    rem -= schur(rem.rank(), top) * c;
    if (!rem.coeff(top).is_zero())
      throw consistency_error("expand_in_basis: elimination failed");
  }
  return out;
}

}  // namespace hecke
