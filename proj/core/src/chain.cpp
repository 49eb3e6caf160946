#include "hecke/chain.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

LatticeChain::LatticeChain(ParahoricShape shape, std::vector<Lattice> steps)
    : shape_(std::move(shape)), steps_(std::move(steps)) {
  if (steps_.empty()) throw input_error("empty lattice chain");
  if (static_cast<int>(steps_.size()) != static_cast<int>(shape_.blocks.size()))
    throw input_error("chain length does not match shape");
  const int n = shape_.rank();
  for (const Lattice& L : steps_)
    if (L.rank() != n) throw input_error("chain lattice rank mismatch");
  for (size_t i = 0; i < steps_.size(); ++i) {
    const Lattice& cur = steps_[i];
    const Lattice next = i + 1 < steps_.size() ? steps_[i + 1] : steps_[0].scaled_t(1);
    if (!cur.contains(next)) throw input_error("chain steps are not nested");
    const int drop = next.det_valuation() - cur.det_valuation();
    if (drop != shape_.blocks[i]) throw input_error("chain step dimension does not match shape");
  }
}

LatticeChain LatticeChain::standard(const LocalField& F, const ParahoricShape& shape) {
  const int n = shape.rank();
  std::vector<Lattice> steps;
  int cut = 0;
  for (size_t i = 0; i < shape.blocks.size(); ++i) {
    std::vector<int> exps(n, 0);
    for (int l = 0; l < cut; ++l) exps[l] = 1;
    steps.push_back(Lattice::from_columns(LocalMatrix::diagonal_t(F, exps)));
    cut += shape.blocks[i];
  }
  return LatticeChain(shape, std::move(steps));
}

Lattice LatticeChain::step_extended(int i) const {
  const int k = length();
  int q = i / k;
  int rem = i % k;
  if (rem < 0) {
    rem += k;
    --q;
  }
  return steps_[rem].scaled_t(q);
}

LatticeChain LatticeChain::apply(const LocalMatrix& g) const {
  std::vector<Lattice> steps;
  steps.reserve(steps_.size());
  for (const Lattice& L : steps_) steps.push_back(L.apply(g));
  return LatticeChain(shape_, std::move(steps));
}

LatticeChain LatticeChain::scaled_t(int k) const {
  std::vector<Lattice> steps;
  steps.reserve(steps_.size());
  for (const Lattice& L : steps_) steps.push_back(L.scaled_t(k));
  return LatticeChain(shape_, std::move(steps));
}

LatticeChain LatticeChain::normalized() const {
  const int n = rank();
  const int s = steps_[0].det_valuation();
  int q = s / n;
  if (s % n != 0 && s < 0) --q;
  return scaled_t(-q);
}

LatticeChain LatticeChain::refined() const {
  const LocalField& F = field();
  const int n = rank();
  std::vector<Lattice> out;
  for (size_t i = 0; i < steps_.size(); ++i) {
    const Lattice& cur = steps_[i];
    const Lattice next = i + 1 < steps_.size() ? steps_[i + 1] : steps_[0].scaled_t(1);
    out.push_back(cur);
    const int d = shape_.blocks[i];
    if (d == 1) continue;
    // Relative Hermite basis of next inside cur; diagonal exponents are 0/1.
    std::vector<int> diag;
    const LocalMatrix rel = hermite_columns(cur.basis().inverse() * next.basis(), &diag);
    std::vector<int> ones;
    for (int j = 0; j < n; ++j)
      if (diag[j] == 1) ones.push_back(j);
    if (static_cast<int>(ones.size()) != d)
      throw consistency_error("refinement step has wrong relative dimension");
    // Flip pivots back to 1 one position at a time, largest index first:
    // X_m = next + span(e_{ones[0..m-1]}) descends from cur to next.
    for (int m = d - 1; m >= 1; --m) {
      LocalMatrix cols = rel;
      for (int l = 0; l < m; ++l) {
        const int j = ones[l];
        for (int row = 0; row < n; ++row)
          cols.at(row, j) = row == j ? SeriesScalar::one(F) : SeriesScalar::zero(F);
      }
      out.push_back(Lattice::from_columns(cur.basis() * cols));
    }
  }
  return LatticeChain(ParahoricShape::iwahori(n), std::move(out));
}

bool LatticeChain::operator==(const LatticeChain& o) const {
  return shape_ == o.shape_ && steps_ == o.steps_;
}

std::string LatticeChain::str() const {
  std::ostringstream os;
  os << "chain" << shape_.str() << "{";
  for (size_t i = 0; i < steps_.size(); ++i) os << (i ? ", " : "") << steps_[i].str();
  os << "}";
  return os.str();
}

namespace {

// Dense F_{q^r}-linear algebra on coefficient windows: each lattice maps to
// the span of its scaled basis vectors inside t^{-A} O^n / t^{D} O^n.
struct WindowSpace {
  GFPtr k;
  int n = 0, A = 0, D = 0;

  int dim() const { return n * (A + D); }

  // Coordinates of t^shift * column j of basis, or empty if it vanishes.
  std::vector<long> vec(const LocalMatrix& basis, int j, int shift) const {
    std::vector<long> out(static_cast<size_t>(dim()), 0);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      const SeriesScalar& x = basis.at(i, j);
      if (!x.known_nonzero()) continue;
      const int hi = std::min(x.top_exponent() + shift, D - 1);
      for (int e = std::max(x.valuation() + shift, -A); e <= hi; ++e) {
        const long c = x.coeff(e - shift);
        if (c == 0) continue;
        out[static_cast<size_t>(i) * (A + D) + (e + A)] = c;
        nonzero = true;
      }
    }
    if (!nonzero) out.clear();
    return out;
  }
};

// Row-reduce into basis; returns rank.
int gf_rank(const GFPtr& k, std::vector<std::vector<long>> rows) {
  int rank = 0;
  const size_t w = rows.empty() ? 0 : rows[0].size();
  size_t col = 0;
  for (; col < w && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const long inv = k->inv(rows[rank][col]);
    for (size_t c = col; c < w; ++c) rows[rank][c] = k->mul(rows[rank][c], inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const long f = rows[i][col];
      for (size_t c = col; c < w; ++c)
        rows[i][c] = k->sub(rows[i][c], k->mul(f, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

// Generating rows of the image of L in the window space: t^m b_j for the
// shifts m that land inside the window.
std::vector<std::vector<long>> window_rows(const WindowSpace& W, const Lattice& L) {
  std::vector<std::vector<long>> rows;
  for (int j = 0; j < W.n; ++j) {
    int colval = 0;
    bool any = false;
    for (int i = 0; i < W.n; ++i)
      if (L.basis().at(i, j).known_nonzero()) {
        const int v = L.basis().at(i, j).valuation();
        colval = any ? std::min(colval, v) : v;
        any = true;
      }
    if (!any) throw consistency_error("lattice basis has a zero column");
    // Nonnegative shifts only: they span exactly L modulo t^D.
    for (int shift = 0; shift <= W.D - 1 - colval; ++shift) {
      std::vector<long> v = W.vec(L.basis(), j, shift);
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
  return rows;
}

struct DimCache {
  const WindowSpace& W;
  std::map<int, std::pair<std::vector<std::vector<long>>, int>> left, right;
  std::map<std::pair<int, int>, int> inter;
  const LatticeChain& C;
  const LatticeChain& D;

  const std::pair<std::vector<std::vector<long>>, int>& get(
      std::map<int, std::pair<std::vector<std::vector<long>>, int>>& cache,
      const LatticeChain& chain, int i) {
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<long>> rows = window_rows(W, chain.step_extended(i));
    const int rank = gf_rank(W.k, rows);
    return cache.emplace(i, std::make_pair(std::move(rows), rank)).first->second;
  }

  int intersection_dim(int i, int j) {
    const auto key = std::make_pair(i, j);
    auto it = inter.find(key);
    if (it != inter.end()) return it->second;
    const auto& a = get(left, C, i);
    const auto& b = get(right, D, j);
    std::vector<std::vector<long>> all = a.first;
    all.insert(all.end(), b.first.begin(), b.first.end());
    const int dim = a.second + b.second - gf_rank(W.k, std::move(all));
    inter[key] = dim;
    return dim;
  }
};

int entry_min_valuation(const LocalMatrix& m) {
  int v = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j).known_nonzero()) v = std::min(v, m.at(i, j).valuation());
  return v;
}

int entry_max_diag(const Lattice& L) {
  int v = 0;
  for (int a : L.diag_exponents()) v = std::max(v, a);
  return v;
}

}  // namespace

AffineWeylElement chain_relative_position(const LatticeChain& C, const LatticeChain& D) {
  if (!(C.shape() == D.shape())) throw input_error("chain shape mismatch");
  if (!C.field().same_field(D.field())) throw input_error("chain field mismatch");
  const int n = C.rank();
  const LatticeChain cc = C.refined();
  const LatticeChain dd = D.refined();

  int vmin = 0, vmax = 1;
  for (const LatticeChain* ch : {&cc, &dd})
    for (const Lattice& L : ch->steps()) {
      vmin = std::min(vmin, entry_min_valuation(L.basis()));
      vmax = std::max(vmax, entry_max_diag(L));
    }
  // Window invariants for every scanned index j in [i - n*spread, i + n*spread]:
  // every chain step contains t^D O^n (so intersections commute with reduction
  // mod t^D) and lies inside t^-A O^n (so nonnegative column shifts span its
  // image).  Chain steps contain t^(n*vmax - (n-1)*vmin) O^n, and scanning
  // shifts them by at most spread powers of t.
  const int spread = n * (vmax - vmin + 2);
  WindowSpace W{C.field().k, n, spread - vmin + 2, vmax + spread + 2};
  DimCache cache{W, {}, {}, {}, cc, dd};

  std::vector<int> u(n, 0);
  for (int i = 0; i < n; ++i) {
    // The jump indicator is 1 for j <= u(i) and 0 above: binary search.
    const auto ind = [&](int j) {
      return cache.intersection_dim(i, j) - cache.intersection_dim(i + 1, j) >= 1;
    };
    int lo = i - n * spread;
    int hi = i + n * spread;
    if (!ind(lo)) throw consistency_error("chain profile scan found no jump in window");
    if (ind(hi)) throw consistency_error("chain profile scan window too small");
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (ind(mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    u[i] = lo;
  }

  // u(i) = n*(v - lambda_l) + sigma^{-1}(l) - 1 on the window i = l-1, v = 0.
  Coweight lam(n, 0);
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int s = u[i] % n;
    if (s < 0) s += n;
    lam[i] = (s - u[i]) / n;
    if (seen[s]) throw consistency_error("chain profile is not an affine permutation");
    seen[s] = true;
    p.p[s] = i;
  }
  return min_double_coset_rep(AffineWeylElement(lam, p), C.shape());
}

namespace {

// Canonical representative of x modulo the lattice with Hermite basis B:
// exponents >= a_j are eliminated row by row from the bottom.
std::vector<SeriesScalar> reduce_mod_hermite(const LocalMatrix& B, const std::vector<int>& diag,
                                             std::vector<SeriesScalar> x) {
  const int n = B.size();
  for (int j = n - 1; j >= 0; --j) {
    const SeriesScalar f = (x[j] - x[j].polynomial_below(diag[j])).shifted(-diag[j]);
    if (f.is_zero()) continue;
    for (int i = 0; i <= j; ++i) x[i] = x[i] - f * B.at(i, j);
  }
  return x;
}

}  // namespace

LocalMatrix adapted_basis(const LatticeChain& C) {
  const LocalField& F = C.field();
  const int n = C.rank();
  LocalMatrix g(F, n);
  int col = 0;
  for (int b = 0; b < C.length(); ++b) {
    const Lattice& cur = C.steps()[b];
    const Lattice next = C.step_extended(b + 1);
    const int d = C.shape().blocks[b];
    std::vector<int> diag;
    const LocalMatrix rel = hermite_columns(cur.basis().inverse() * next.basis(), &diag);
    // Coordinates in cur/next live at the rows with relative pivot t^1.
    std::vector<int> qrows;
    for (int j = 0; j < n; ++j)
      if (diag[j] == 1) qrows.push_back(j);
    std::vector<std::vector<long>> picked;
    for (int j = 0; j < n && static_cast<int>(picked.size()) < d; ++j) {
      std::vector<SeriesScalar> e(static_cast<size_t>(n), SeriesScalar::zero(F));
      e[j] = SeriesScalar::one(F);
      std::vector<SeriesScalar> red = reduce_mod_hermite(rel, diag, std::move(e));
      std::vector<long> coords;
      for (int qr : qrows) coords.push_back(red[qr].is_zero() ? 0 : red[qr].coeff(0));
      std::vector<std::vector<long>> trial = picked;
      trial.push_back(coords);
      if (gf_rank(F.k, trial) == static_cast<int>(trial.size())) {
        picked.push_back(std::move(coords));
        for (int i = 0; i < n; ++i) g.at(i, col) = cur.basis().at(i, j);
        ++col;
      }
    }
    if (static_cast<int>(picked.size()) != d)
      throw consistency_error("chain step quotient has too few independent basis images");
  }
  return g;
}

AffineWeylElement monomial_normal_form(const LocalMatrix& g) {
  const LocalField& F = g.field();
  const int n = g.size();
  const SeriesScalar dt = g.det();
  if (dt.is_zero()) {
    if (dt.exact()) throw input_error("matrix is singular");
    throw precision_error("matrix determinant is zero to precision " + std::to_string(dt.cap()));
  }
  LocalMatrix m = g;
  std::vector<bool> row_done(n, false), col_done(n, false);
  Coweight lam(n, 0);
  Permutation p(n);
  for (int step = 0; step < n; ++step) {
    // Global minimal valuation; ties resolved top-most then right-most, so
    // tied entries sit below or left of the pivot where elimination factors
    // are unconstrained, and the factors above/right are strictly inside tO
    // as the Iwahori constraint demands.
    int bi = -1, bj = -1, bestv = 0;
    int floor_unknown = std::numeric_limits<int>::max();
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (int j = n - 1; j >= 0; --j) {
        if (col_done[j]) continue;
        const SeriesScalar& x = m.at(i, j);
        if (!x.known_nonzero()) {
          if (!x.exact()) floor_unknown = std::min(floor_unknown, x.cap());
          continue;
        }
        if (first || x.valuation() < bestv) {
          first = false;
          bestv = x.valuation();
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) {
      if (floor_unknown < std::numeric_limits<int>::max())
        throw precision_error("pivot entry is zero to precision " +
                              std::to_string(floor_unknown));
      throw consistency_error("invertible matrix ran out of pivots");
    }
    // A hidden coefficient tying the winner would sit at an unknown position
    // and could break the triangular factor constraints, so the unknown floor
    // must clear the winning valuation strictly.
    if (floor_unknown <= bestv)
      throw precision_error("pivot entry is zero to precision " + std::to_string(floor_unknown));
    const SeriesScalar piv_inv = m.at(bi, bj).inverse();
    for (int j = 0; j < n; ++j) {
      if (j == bj || col_done[j]) continue;
      const SeriesScalar f = m.at(bi, j) * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int i = 0; i < n; ++i) {
        if (row_done[i]) continue;
        m.at(i, j) = m.at(i, j) - f * m.at(i, bj);
      }
      m.at(bi, j) = SeriesScalar::zero(F);
    }
    for (int i = 0; i < n; ++i) {
      if (i == bi || row_done[i]) continue;
      const SeriesScalar f = m.at(i, bj) * piv_inv;
      if (f.is_zero() && f.exact()) continue;
      for (int j = 0; j < n; ++j) {
        if (col_done[j]) continue;
        m.at(i, j) = m.at(i, j) - f * m.at(bi, j);
      }
      m.at(i, bj) = SeriesScalar::zero(F);
    }
    row_done[bi] = true;
    col_done[bj] = true;
    // Entry t^a at (bi, bj) means sigma(bj) = bi with lambda_{bi} = a.
    lam[bi] = bestv;
    p.p[bj] = bi;
  }
  return {lam, p};
}

}  // namespace hecke
