#include "hecke/spherical.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "hecke/bigint.hpp"
#include "hecke/errors.hpp"
#include "hecke/lattice.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

SphericalHeckeElement SphericalHeckeElement::unit(int rank) {
  SphericalHeckeElement f(rank);
  f.add_term(Coweight(rank, 0), LaurentScalar(1));
  return f;
}

SphericalHeckeElement SphericalHeckeElement::indicator(const Coweight& mu) {
  SphericalHeckeElement f(static_cast<int>(mu.size()));
  f.add_term(mu, LaurentScalar(1));
  return f;
}

LaurentScalar SphericalHeckeElement::coeff(const Coweight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void SphericalHeckeElement::add_term(const Coweight& mu, const LaurentScalar& c) {
  if (static_cast<int>(mu.size()) != rank_) throw input_error("coweight rank mismatch");
  if (!is_dominant(mu)) throw input_error("spherical support must be dominant");
  LaurentScalar& slot = terms_[mu];
  slot += c;
  if (slot.is_zero()) terms_.erase(mu);
}

SphericalHeckeElement SphericalHeckeElement::operator+(const SphericalHeckeElement& o) const {
  if (rank_ != o.rank_) throw input_error("rank mismatch");
  SphericalHeckeElement out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, c);
  return out;
}

SphericalHeckeElement SphericalHeckeElement::operator-(const SphericalHeckeElement& o) const {
  if (rank_ != o.rank_) throw input_error("rank mismatch");
  SphericalHeckeElement out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, -c);
  return out;
}

SphericalHeckeElement SphericalHeckeElement::scaled(const LaurentScalar& c) const {
  SphericalHeckeElement out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [mu, k] : terms_) out.add_term(mu, k * c);
  return out;
}

bool SphericalHeckeElement::operator==(const SphericalHeckeElement& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

int SphericalHeckeElement::support_norm() const {
  int m = 0;
  for (const auto& [mu, c] : terms_) m = std::max(m, norm_pm(mu));
  return m;
}

std::string SphericalHeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*f" << coweight_str(mu);
  }
  return os.str();
}

namespace {

// Reading word of a tableau: rows bottom to top, each left to right.
std::vector<int> reading_word(const std::vector<std::vector<int>>& tab) {
  std::vector<int> w;
  for (auto row = tab.rbegin(); row != tab.rend(); ++row)
    for (int x : *row) w.push_back(x);
  return w;
}

// Charge of a word with partition content: repeatedly extract a standard
// subword (rightmost 1, then for each next letter the rightmost occurrence
// strictly to the left, wrapping to the global rightmost when none) and sum
// the indices, stepping the index by one whenever the next letter sits to
// the right of the previous one.
int word_charge(std::vector<int> w) {
  std::vector<bool> used(w.size(), false);
  size_t remaining = w.size();
  int charge = 0;
  while (remaining > 0) {
    int maxletter = 0;
    for (size_t i = 0; i < w.size(); ++i)
      if (!used[i]) maxletter = std::max(maxletter, w[i]);
    int prev = -1;
    for (size_t i = w.size(); i-- > 0;)
      if (!used[i] && w[i] == 1) {
        prev = static_cast<int>(i);
        break;
      }
    if (prev < 0) throw consistency_error("charge word content is not a partition");
    used[prev] = true;
    --remaining;
    int index = 0;
    for (int letter = 2; letter <= maxletter; ++letter) {
      int pick = -1;
      for (int i = prev - 1; i >= 0; --i)
        if (!used[i] && w[i] == letter) {
          pick = i;
          break;
        }
      if (pick < 0)
        for (size_t i = w.size(); i-- > 0;)
          if (!used[i] && w[i] == letter) {
            pick = static_cast<int>(i);
            break;
          }
      if (pick < 0) throw consistency_error("charge word content is not a partition");
      if (pick > prev) ++index;
      charge += index;
      used[pick] = true;
      --remaining;
      prev = pick;
    }
  }
  return charge;
}

void fill_tableau(const std::vector<int>& shape, std::vector<std::vector<int>>& tab,
                  std::vector<int>& budget, int row, int col,
                  const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (row == static_cast<int>(shape.size())) {
    emit(tab);
    return;
  }
  int nrow = row, ncol = col + 1;
  if (ncol >= shape[row]) {
    nrow = row + 1;
    ncol = 0;
  }
  const int lo_left = col > 0 ? tab[row][col - 1] : 1;
  const int lo_up = row > 0 && col < shape[row - 1] ? tab[row - 1][col] + 1 : 1;
  for (int v = std::max(lo_left, lo_up); v <= static_cast<int>(budget.size()); ++v) {
    if (budget[v - 1] == 0) continue;
    --budget[v - 1];
    tab[row][col] = v;
    fill_tableau(shape, tab, budget, nrow, ncol, emit);
    ++budget[v - 1];
  }
}

}  // namespace

std::vector<Int> kostka_foulkes(const Coweight& shape, const Coweight& content) {
  for (int x : shape)
    if (x < 0) throw input_error("kostka_foulkes needs a partition shape");
  for (int x : content)
    if (x < 0) throw input_error("kostka_foulkes needs a partition content");
  if (!is_dominant(shape) || !is_dominant(content))
    throw input_error("kostka_foulkes arguments must be dominant");
  std::vector<int> rows;
  for (int x : shape)
    if (x > 0) rows.push_back(x);
  std::vector<Int> out;
  if (total(shape) != total(content)) return out;
  if (rows.empty()) {
    out.push_back(1);
    return out;
  }
  std::vector<std::vector<int>> tab;
  for (int x : rows) tab.push_back(std::vector<int>(x, 0));
  std::vector<int> budget(content.begin(), content.end());
  while (!budget.empty() && budget.back() == 0) budget.pop_back();
  fill_tableau(
      rows, tab, budget, 0, 0, [&](const std::vector<std::vector<int>>& t) {
        const int c = word_charge(reading_word(t));
        if (static_cast<int>(out.size()) <= c) out.resize(c + 1);
        out[c] += 1;
      });
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

SymLaurent hall_littlewood(int rank, const Coweight& mu) {
  if (static_cast<int>(mu.size()) != rank) throw input_error("coweight rank mismatch");
  if (!is_dominant(mu)) throw input_error("hall_littlewood needs a dominant coweight");
  static std::mutex mu_lock;
  static std::map<std::pair<int, Coweight>, SymLaurent> cache;
  {
    std::lock_guard<std::mutex> lock(mu_lock);
    auto it = cache.find({rank, mu});
    if (it != cache.end()) return it->second;
  }
  SymLaurent out(rank);
  if (mu.back() < 0) {
    const int shift = mu.back();
    Coweight part = mu;
    for (int& x : part) x -= shift;
    out = hall_littlewood(rank, part) * monomial_sym(rank, Coweight(rank, shift));
  } else {
    out = schur(rank, mu);
    for (const Coweight& la : dominant_below(mu)) {
      if (la == mu) continue;
      const std::vector<Int> K = kostka_foulkes(mu, la);
      LaurentScalar k;
      for (size_t c = 0; c < K.size(); ++c)
        if (K[c] != 0) k += LaurentScalar::term(K[c], -2 * static_cast<int>(c));
      if (k.is_zero()) continue;
      out -= hall_littlewood(rank, la) * k;
    }
  }
  std::lock_guard<std::mutex> lock(mu_lock);
  cache.emplace(std::make_pair(rank, mu), out);
  return out;
}

SymLaurent satake(const SphericalHeckeElement& f) {
  SymLaurent out(f.rank());
  for (const auto& [nu, c] : f.terms())
    out += hall_littlewood(f.rank(), nu) * (c * LaurentScalar::v_power(two_rho_pairing(nu)));
  return out;
}

SphericalHeckeElement satake_inverse(const SymLaurent& P) {
  const int n = P.rank();
  SphericalHeckeElement out(n);
  SymLaurent R = P;
  while (!R.terms().empty()) {
    // Dominance-maximal key within its total-degree class.
    Coweight top = R.terms().begin()->first;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [m, c] : R.terms())
        if (m != top && total(m) == total(top) && dominance_leq(top, m)) {
          top = m;
          grew = true;
          break;
        }
    }
    const LaurentScalar c = R.coeff(top) * LaurentScalar::v_power(-two_rho_pairing(top));
    out.add_term(top, c);
    R -= hall_littlewood(n, top) * (c * LaurentScalar::v_power(two_rho_pairing(top)));
    if (!R.coeff(top).is_zero())
      throw consistency_error("triangular elimination failed to clear the leading term");
  }
  return out;
}

SphericalHeckeElement ic_function(int rank, const Coweight& mu) {
  return satake_inverse(schur(rank, mu));
}

SphericalHeckeElement convolve_spherical(const SphericalHeckeElement& f,
                                         const SphericalHeckeElement& g) {
  if (f.rank() != g.rank()) throw input_error("rank mismatch");
  return satake_inverse(satake(f) * satake(g));
}

LaurentScalar reduce_mod_q(const LaurentScalar& c, long q) {
  const QuadValue val = c.specialize(q);
  LaurentScalar out = LaurentScalar::term(val.a, -2 * val.dexp);
  out += LaurentScalar::term(val.b, 1 - 2 * val.dexp);
  return out;
}

SymLaurent satake_bruteforce(const SphericalHeckeElement& f, long q, BruteforceCertificate* cert,
                             int extra_prec) {
  const int n = f.rank();
  SymLaurent out(n);
  if (cert) *cert = BruteforceCertificate{q, 0, 0};
  if (f.is_zero()) return out;

  int nu_min = 0;
  std::vector<Coweight> window;
  for (const auto& [nu, c] : f.terms()) {
    for (int x : nu) nu_min = std::min(nu_min, x);
    for (const Coweight& la : dominant_below(nu))
      if (std::find(window.begin(), window.end(), la) == window.end()) window.push_back(la);
  }
  int max_entry = 0;
  for (const Coweight& la : window)
    for (int x : la) max_entry = std::max(max_entry, x);
  const int Bmax = std::max(0, max_entry - nu_min);
  const LocalField Fq(q, 1, Bmax + max_entry + 8 + extra_prec);

  const int npos = n * (n - 1) / 2;
  long cosets = 0;
  for (const Coweight& la : window) {
    int la_max = la[0];
    const int B = std::max(0, la_max - nu_min);
    // Entries below t^-B force an elementary divisor below every support
    // coweight, so those cosets contribute nothing: the window is complete.
    std::vector<long> digits(static_cast<size_t>(npos) * B, 0);
    LaurentScalar acc;
    while (true) {
      LocalMatrix m(Fq, n);
      for (int i = 0; i < n; ++i) m.at(i, i) = SeriesScalar::t_power(Fq, la[i]);
      int slot = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<long> coeffs;
          for (int e = 0; e < B; ++e) coeffs.push_back(digits[slot * B + e]);
          ++slot;
          SeriesScalar x = SeriesScalar::from_poly(Fq, -B, std::move(coeffs));
          m.at(i, j) = x.shifted(la[i]);
        }
      ++cosets;
      const Coweight inv = smith_exponents(m);
      const LaurentScalar fv = f.coeff(inv);
      if (!fv.is_zero()) acc += fv;
      // Mixed-radix increment over all entry coefficients.
      size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    if (!acc.is_zero())
      out.set_coeff(la, reduce_mod_q(acc * LaurentScalar::v_power(-two_rho_pairing(la)), q));
  }
  if (cert) *cert = BruteforceCertificate{q, -Bmax, cosets};
  return out;
}

LaurentScalar lift_from_evaluations(const std::vector<std::pair<long, LaurentScalar>>& samples,
                                    int lo, int hi) {
  if (lo > hi) throw input_error("empty lift window");
  std::vector<int> evens, odds;
  for (int e = lo; e <= hi; ++e) ((e % 2 + 2) % 2 == 0 ? evens : odds).push_back(e);
  const size_t need = std::max(evens.size(), odds.size());
  if (samples.size() < need)
    throw uncertified_error("interpolation needs " + std::to_string(need) + " samples, have " +
                            std::to_string(samples.size()));

  const auto solve = [&](const std::vector<int>& exps, bool odd) -> std::map<int, Int> {
    std::map<int, Int> out;
    if (exps.empty()) return out;
    const size_t k = exps.size();
    // Row per sample: sum_e a_e q^{(e - parity)/2} = image part; clear the
    // negative powers by a common q shift.
    int emin = exps.front();
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (size_t s = 0; s < k; ++s) {
      const long q = samples[s].first;
      const QuadValue im = samples[s].second.specialize(q);
      std::vector<Rational> row;
      for (int e : exps) {
        const int pw = (e - (odd ? 1 : 0)) / 2 - (emin - (odd ? 1 : 0)) / 2;
        Rational cell = 1;
        for (int i = 0; i < pw; ++i) cell *= q;
        row.push_back(cell);
      }
      Rational target(odd ? im.b : im.a);
      for (int i = 0; i < im.dexp; ++i) target /= q;
      const int shift = (emin - (odd ? 1 : 0)) / 2;
      for (int i = 0; i < shift; ++i) target /= q;
      for (int i = 0; i < -shift; ++i) target *= q;
      M.push_back(std::move(row));
      rhs.push_back(std::move(target));
    }
    // Gaussian elimination over the rationals.
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && M[piv][col] == 0) ++piv;
      if (piv == k) throw uncertified_error("interpolation points are degenerate");
      std::swap(M[piv], M[col]);
      std::swap(rhs[piv], rhs[col]);
      for (size_t r = 0; r < k; ++r) {
        if (r == col || M[r][col] == 0) continue;
        const Rational fct = M[r][col] / M[col][col];
        for (size_t c2 = col; c2 < k; ++c2) M[r][c2] -= fct * M[col][c2];
        rhs[r] -= fct * rhs[col];
      }
    }
    for (size_t i = 0; i < k; ++i) {
      const Rational a = rhs[i] / M[i][i];
      if (boost::multiprecision::denominator(a) != 1)
        throw uncertified_error("interpolated coefficient is not an integer");
      const Int num = boost::multiprecision::numerator(a);
      if (num != 0) out[exps[i]] = num;
    }
    return out;
  };

  std::map<int, Int> coeffs = solve(evens, false);
  for (const auto& [e, a] : solve(odds, true)) coeffs[e] = a;
  LaurentScalar result;
  for (const auto& [e, a] : coeffs) result += LaurentScalar::term(a, e);
  // Every sample, including ones beyond the solve, must reproduce.
  for (const auto& [q, image] : samples)
    if (!(reduce_mod_q(result, q) - reduce_mod_q(image, q)).is_zero())
      throw uncertified_error("interpolation residual is nonzero at q=" + std::to_string(q));
  return result;
}

}  // namespace hecke
