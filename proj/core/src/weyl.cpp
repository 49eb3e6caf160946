#include "hecke/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) throw input_error("transposition index out of range");
  Permutation w(n);
  std::swap(w.p[a], w.p[b]);
  return w;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw input_error("permutation size mismatch");
  Permutation r(size());
  for (int i = 0; i < size(); ++i) r.p[i] = p[o.p[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (int i = 0; i < size(); ++i) r.p[p[i]] = i;
  return r;
}

Coweight Permutation::act(const Coweight& m) const {
  if (static_cast<int>(m.size()) != size()) throw input_error("coweight rank mismatch");
  Coweight r(m.size());
  for (int i = 0; i < size(); ++i) r[p[i]] = m[i];
  return r;
}

int Permutation::finite_length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

AffineWeylElement AffineWeylElement::identity(int n) {
  return {Coweight(n, 0), Permutation(n)};
}

AffineWeylElement AffineWeylElement::translation(const Coweight& m) {
  return {m, Permutation(static_cast<int>(m.size()))};
}

AffineWeylElement AffineWeylElement::from_permutation(const Permutation& w) {
  return {Coweight(w.size(), 0), w};
}

AffineWeylElement AffineWeylElement::simple(int n, int i) {
  if (n < 2) throw input_error("no simple reflections in rank < 2");
  if (i < 0 || i >= n) throw input_error("simple reflection index out of range");
  if (i >= 1) return from_permutation(Permutation::transposition(n, i - 1, i));
  Coweight m(n, 0);
  m[0] = 1;
  m[n - 1] = -1;
  return {m, Permutation::transposition(n, 0, n - 1)};
}

AffineWeylElement AffineWeylElement::omega(int n) {
  Coweight m(n, 0);
  m[0] = 1;
  Permutation c(n);
  for (int i = 0; i < n; ++i) c.p[i] = (i + 1) % n;
  return {m, c};
}

AffineWeylElement AffineWeylElement::omega_power(int n, int k) {
  AffineWeylElement r = identity(n);
  AffineWeylElement g = k >= 0 ? omega(n) : omega(n).inverse();
  for (int i = 0; i < std::abs(k); ++i) r = r * g;
  return r;
}

bool AffineWeylElement::operator<(const AffineWeylElement& o) const {
  if (t != o.t) return t < o.t;
  return w < o.w;
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  if (rank() != o.rank()) throw input_error("weyl rank mismatch");
  return {t + w.act(o.t), w * o.w};
}

AffineWeylElement AffineWeylElement::inverse() const {
  Permutation wi = w.inverse();
  return {wi.act(-t), wi};
}

int AffineWeylElement::length() const {
  const int n = rank();
  const Permutation wi = w.inverse();
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = t[i] - t[j];
      len += wi.p[i] < wi.p[j] ? std::abs(d) : std::abs(d - 1);
    }
  return len;
}

AffineWeylElement AffineWeylElement::affine_part() const {
  return omega_power(rank(), -omega_exponent()) * *this;
}

std::vector<int> AffineWeylElement::reduced_word() const {
  const int n = rank();
  AffineWeylElement x = affine_part();
  std::vector<int> seq;
  int len = x.length();
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < n; ++i) {
      AffineWeylElement y = x * simple(n, i);
      const int ylen = y.length();
      if (ylen < len) {
        seq.push_back(i);
        x = std::move(y);
        len = ylen;
        found = true;
        break;
      }
    }
    if (!found) throw consistency_error("positive-length element with no right descent");
  }
  if (!x.w.is_identity() || total(x.t) != 0 || x.t != Coweight(n, 0))
    throw consistency_error("reduced word did not terminate at the identity");
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::string AffineWeylElement::str() const {
  std::ostringstream os;
  os << "t[";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << "]*w[";
  for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.p[i] + 1;
  os << "]";
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s, size_t& pos, char open, char close) {
  if (pos >= s.size() || s[pos] != open) throw input_error("bad weyl element literal: " + s);
  ++pos;
  std::vector<int> out;
  while (pos < s.size() && s[pos] != close) {
    size_t used = 0;
    int value = std::stoi(s.substr(pos), &used);
    out.push_back(value);
    pos += used;
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size()) throw input_error("bad weyl element literal: " + s);
  ++pos;
  return out;
}

}  // namespace

AffineWeylElement AffineWeylElement::parse(const std::string& s) {
  size_t pos = 0;
  if (s.rfind("t", 0) != 0) throw input_error("bad weyl element literal: " + s);
  pos = 1;
  std::vector<int> tv = parse_int_list(s, pos, '[', ']');
  if (pos + 1 >= s.size() || s[pos] != '*' || s[pos + 1] != 'w')
    throw input_error("bad weyl element literal: " + s);
  pos += 2;
  std::vector<int> wv = parse_int_list(s, pos, '[', ']');
  if (pos != s.size() || wv.size() != tv.size())
    throw input_error("bad weyl element literal: " + s);
  const int n = static_cast<int>(tv.size());
  Permutation w(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int img = wv[i] - 1;
    if (img < 0 || img >= n || seen[img]) throw input_error("bad permutation in literal: " + s);
    seen[img] = true;
    w.p[i] = img;
  }
  return {tv, w};
}

std::ostream& operator<<(std::ostream& os, const AffineWeylElement& x) {
  return os << x.str();
}

namespace {

bool bruhat_affine(const AffineWeylElement& x, const AffineWeylElement& y) {
  const int ylen = y.length();
  if (x.length() > ylen) return false;
  if (ylen == 0) return x == y;
  const int n = x.rank();
  for (int i = 0; i < n; ++i) {
    const AffineWeylElement s = AffineWeylElement::simple(n, i);
    const AffineWeylElement sy = s * y;
    if (sy.length() < ylen) {
      const AffineWeylElement sx = s * x;
      if (sx.length() < x.length()) return bruhat_affine(sx, sy);
      return bruhat_affine(x, sy);
    }
  }
  throw consistency_error("positive-length element with no left descent");
}

}  // namespace

bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) {
  if (x.rank() != y.rank()) throw input_error("weyl rank mismatch");
  if (x.omega_exponent() != y.omega_exponent()) return false;
  if (x.rank() == 1) return true;
  return bruhat_affine(x.affine_part(), y.affine_part());
}

ParahoricShape::ParahoricShape(std::vector<int> b) : blocks(std::move(b)) {
  if (blocks.empty()) throw input_error("empty parahoric shape");
  for (int d : blocks)
    if (d <= 0) throw input_error("parahoric shape blocks must be positive");
}

ParahoricShape ParahoricShape::iwahori(int n) {
  return ParahoricShape(std::vector<int>(n, 1));
}

ParahoricShape ParahoricShape::maximal(int n) {
  return ParahoricShape(std::vector<int>{n});
}

int ParahoricShape::rank() const {
  int n = 0;
  for (int d : blocks) n += d;
  return n;
}

std::vector<int> ParahoricShape::finite_generators() const {
  std::set<int> cuts;
  int c = 0;
  for (int d : blocks) {
    c += d;
    cuts.insert(c);
  }
  std::vector<int> gens;
  for (int i = 1; i < rank(); ++i)
    if (!cuts.count(i)) gens.push_back(i);
  return gens;
}

std::vector<Permutation> ParahoricShape::finite_weyl_elements() const {
  const int n = rank();
  std::vector<Permutation> gens;
  for (int i : finite_generators()) gens.push_back(Permutation::transposition(n, i - 1, i));
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (size_t head = 0; head < queue.size(); ++head) {
    const Permutation cur = queue[head];
    for (const Permutation& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

std::string ParahoricShape::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
  os << ")";
  return os.str();
}

AffineWeylElement min_double_coset_rep(const AffineWeylElement& x, const ParahoricShape& J) {
  if (x.rank() != J.rank()) throw input_error("parahoric rank mismatch");
  const int n = x.rank();
  AffineWeylElement cur = x;
  int len = cur.length();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J.finite_generators()) {
      const AffineWeylElement s = AffineWeylElement::simple(n, i);
      AffineWeylElement left = s * cur;
      if (left.length() < len) {
        cur = std::move(left);
        len = cur.length();
        moved = true;
        continue;
      }
      AffineWeylElement right = cur * s;
      if (right.length() < len) {
        cur = std::move(right);
        len = cur.length();
        moved = true;
      }
    }
  }
  return cur;
}

namespace {

void dominant_below_rec(const Coweight& bound, Coweight& prefix, int partial,
                        std::vector<Coweight>& out) {
  const int n = static_cast<int>(bound.size());
  const int i = static_cast<int>(prefix.size());
  const int tot = total(bound);
  if (i == n) {
    if (partial == tot) out.push_back(prefix);
    return;
  }
  int bound_partial = 0;
  for (int j = 0; j <= i; ++j) bound_partial += bound[j];
  int hi = bound_partial - partial;
  if (i > 0) hi = std::min(hi, prefix.back());
  // Remaining entries are <= the current one, so it must cover its share.
  const int remaining = tot - partial;
  const int slots = n - i;
  int lo = remaining >= 0 ? (remaining + slots - 1) / slots
                          : -((-remaining) / slots);
  while (lo * slots < remaining) ++lo;
  for (int m = lo; m <= hi; ++m) {
    prefix.push_back(m);
    dominant_below_rec(bound, prefix, partial + m, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Coweight> dominant_below(const Coweight& bound) {
  if (!is_dominant(bound)) throw input_error("dominant_below requires a dominant bound");
  std::vector<Coweight> out;
  Coweight prefix;
  dominant_below_rec(bound, prefix, 0, out);
  return out;
}

std::vector<AffineWeylElement> double_coset_reps(const ParahoricShape& J, const Coweight& bound) {
  const int n = J.rank();
  if (static_cast<int>(bound.size()) != n) throw input_error("parahoric rank mismatch");
  std::set<AffineWeylElement> reps;
  std::vector<int> perm(n);
  for (const Coweight& nu : dominant_below(bound)) {
    for (const Coweight& lam : coweight_orbit(nu)) {
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        Permutation w(n);
        w.p = perm;
        reps.insert(min_double_coset_rep({lam, w}, J));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {reps.begin(), reps.end()};
}

bool coset_leq(const AffineWeylElement& xmin, const AffineWeylElement& ymin) {
  return bruhat_leq(xmin, ymin);
}

}  // namespace hecke
