#include "hecke/parahoric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using TermMap = std::map<AffineWeylElement, LaurentScalar>;

void add_into(TermMap& m, const AffineWeylElement& w, const LaurentScalar& c) {
  auto it = m.find(w);
  if (it == m.end()) {
    if (!c.is_zero()) m.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

// m -> m * T_{s_i} by the quadratic relation T_s^2 = (q-1)T_s + q.
TermMap fold_generator(const TermMap& m, int rank, int i) {
  const AffineWeylElement s = AffineWeylElement::simple(rank, i);
  const LaurentScalar q = q_power(1);
  const LaurentScalar qm1 = q - LaurentScalar(1);
  TermMap out;
  for (const auto& [y, e] : m) {
    AffineWeylElement ys = y * s;
    if (ys.length() > y.length()) {
      add_into(out, ys, e);
    } else {
      add_into(out, ys, e * q);
      add_into(out, y, e * qm1);
    }
  }
  return out;
}

// m -> m * T_{s_i}^{-1}, with T_s^{-1} = q^{-1} T_s - (1 - q^{-1}) T_e.
TermMap fold_generator_inverse(const TermMap& m, int rank, int i) {
  const LaurentScalar qinv = LaurentScalar::v_power(-2);
  const LaurentScalar one_minus = LaurentScalar(1) - qinv;
  TermMap folded = fold_generator(m, rank, i);
  TermMap out;
  for (const auto& [y, e] : folded) add_into(out, y, e * qinv);
  for (const auto& [y, e] : m) add_into(out, y, -(e * one_minus));
  return out;
}

TermMap shift_omega(const TermMap& m, int rank, int k) {
  const AffineWeylElement om = AffineWeylElement::omega_power(rank, k);
  TermMap out;
  for (const auto& [y, e] : m) out.emplace(y * om, e);
  return out;
}

}  // namespace

IwahoriHeckeElement IwahoriHeckeElement::unit(int rank) {
  return basis(AffineWeylElement::identity(rank));
}

IwahoriHeckeElement IwahoriHeckeElement::basis(const AffineWeylElement& w) {
  IwahoriHeckeElement out(w.rank());
  out.terms_.emplace(w, LaurentScalar(1));
  return out;
}

LaurentScalar IwahoriHeckeElement::coeff(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void IwahoriHeckeElement::add_term(const AffineWeylElement& w, const LaurentScalar& c) {
  if (w.rank() != rank_) throw input_error("term rank mismatch");
  add_into(terms_, w, c);
}

IwahoriHeckeElement IwahoriHeckeElement::operator+(const IwahoriHeckeElement& o) const {
  if (rank_ != o.rank_) throw input_error("rank mismatch in sum");
  IwahoriHeckeElement out = *this;
  for (const auto& [w, c] : o.terms_) add_into(out.terms_, w, c);
  return out;
}

IwahoriHeckeElement IwahoriHeckeElement::operator-(const IwahoriHeckeElement& o) const {
  if (rank_ != o.rank_) throw input_error("rank mismatch in difference");
  IwahoriHeckeElement out = *this;
  for (const auto& [w, c] : o.terms_) add_into(out.terms_, w, -c);
  return out;
}

IwahoriHeckeElement IwahoriHeckeElement::scaled(const LaurentScalar& c) const {
  IwahoriHeckeElement out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [w, e] : terms_) out.terms_.emplace(w, e * c);
  return out;
}

IwahoriHeckeElement IwahoriHeckeElement::operator*(const IwahoriHeckeElement& o) const {
  if (rank_ != o.rank_) throw input_error("rank mismatch in product");
  IwahoriHeckeElement out(rank_);
  for (const auto& [w, d] : o.terms_) {
    // T_w = T_{omega^m} T_{s_{i_1}} ... T_{s_{i_k}} along a reduced word.
    TermMap cur = shift_omega(terms_, rank_, w.omega_exponent());
    for (int i : w.reduced_word()) cur = fold_generator(cur, rank_, i);
    for (const auto& [y, e] : cur) add_into(out.terms_, y, e * d);
  }
  return out;
}

bool IwahoriHeckeElement::operator==(const IwahoriHeckeElement& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

std::string IwahoriHeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*T[" << w.str() << "]";
  }
  return os.str();
}

IwahoriHeckeElement basis_inverse(const AffineWeylElement& w) {
  const int n = w.rank();
  std::vector<int> word = w.reduced_word();
  TermMap cur;
  cur.emplace(AffineWeylElement::identity(n), LaurentScalar(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = fold_generator_inverse(cur, n, *it);
  cur = shift_omega(cur, n, -w.omega_exponent());
  IwahoriHeckeElement out(n);
  for (const auto& [y, e] : cur) out.add_term(y, e);
  return out;
}

IwahoriHeckeElement theta(const Coweight& lambda) {
  const int n = static_cast<int>(lambda.size());
  // lambda = a - b with both parts dominant: b a staircase steep enough to
  // absorb every ascent of lambda.
  int steep = 0;
  for (int i = 0; i + 1 < n; ++i) steep = std::max(steep, lambda[i + 1] - lambda[i]);
  Coweight b(n);
  for (int i = 0; i < n; ++i) b[i] = steep * (n - 1 - i);
  Coweight a = lambda;
  for (int i = 0; i < n; ++i) a[i] += b[i];
  const AffineWeylElement ta = AffineWeylElement::translation(a);
  const AffineWeylElement tb = AffineWeylElement::translation(b);
  IwahoriHeckeElement out = IwahoriHeckeElement::basis(ta) * basis_inverse(tb);
  return out.scaled(LaurentScalar::v_power(tb.length() - ta.length()));
}

IwahoriHeckeElement bernstein_z(const Coweight& mu) {
  IwahoriHeckeElement out(static_cast<int>(mu.size()));
  for (const Coweight& lam : coweight_orbit(mu)) out = out + theta(lam);
  return out;
}

ParahoricHeckeElement ParahoricHeckeElement::unit(const ParahoricShape& J) {
  ParahoricHeckeElement out(J);
  out.values_.emplace(AffineWeylElement::identity(J.rank()), LaurentScalar(1));
  return out;
}

LaurentScalar ParahoricHeckeElement::value(const AffineWeylElement& w) const {
  auto it = values_.find(min_double_coset_rep(w, J_));
  return it == values_.end() ? LaurentScalar() : it->second;
}

void ParahoricHeckeElement::add_value(const AffineWeylElement& min_rep,
                                      const LaurentScalar& c) {
  if (!(min_rep == min_double_coset_rep(min_rep, J_)))
    throw input_error("not a minimal double-coset representative: " + min_rep.str());
  add_into(values_, min_rep, c);
}

ParahoricHeckeElement ParahoricHeckeElement::operator+(const ParahoricHeckeElement& o) const {
  if (!(J_ == o.J_)) throw input_error("level mismatch in sum");
  ParahoricHeckeElement out = *this;
  for (const auto& [w, c] : o.values_) add_into(out.values_, w, c);
  return out;
}

ParahoricHeckeElement ParahoricHeckeElement::operator-(const ParahoricHeckeElement& o) const {
  if (!(J_ == o.J_)) throw input_error("level mismatch in difference");
  ParahoricHeckeElement out = *this;
  for (const auto& [w, c] : o.values_) add_into(out.values_, w, -c);
  return out;
}

ParahoricHeckeElement ParahoricHeckeElement::scaled(const LaurentScalar& c) const {
  ParahoricHeckeElement out(J_);
  if (c.is_zero()) return out;
  for (const auto& [w, e] : values_) out.values_.emplace(w, e * c);
  return out;
}

bool ParahoricHeckeElement::operator==(const ParahoricHeckeElement& o) const {
  return J_ == o.J_ && values_ == o.values_;
}

IwahoriHeckeElement ParahoricHeckeElement::to_iwahori() const {
  const int n = rank();
  const std::vector<Permutation> WJ = J_.finite_weyl_elements();
  IwahoriHeckeElement out(n);
  for (const auto& [x, val] : values_) {
    std::set<AffineWeylElement> coset;
    for (const Permutation& u : WJ)
      for (const Permutation& v : WJ)
        coset.insert(AffineWeylElement::from_permutation(u) * x *
                     AffineWeylElement::from_permutation(v));
    for (const AffineWeylElement& w : coset) out.add_term(w, val);
  }
  return out;
}

std::string ParahoricHeckeElement::str() const {
  if (values_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : values_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << w.str() << "]";
  }
  return os.str();
}

ParahoricHeckeElement parahoric_from_iwahori(const IwahoriHeckeElement& h,
                                             const ParahoricShape& J) {
  const std::vector<Permutation> WJ = J.finite_weyl_elements();
  std::map<AffineWeylElement, std::pair<LaurentScalar, long>> classes;
  for (const auto& [w, c] : h.terms()) {
    AffineWeylElement m = min_double_coset_rep(w, J);
    auto [it, fresh] = classes.try_emplace(m, c, 1);
    if (!fresh) {
      if (!(it->second.first == c))
        throw consistency_error("coefficients not constant on the double coset of " +
                                m.str());
      ++it->second.second;
    }
  }
  ParahoricHeckeElement out(J);
  for (const auto& [m, cc] : classes) {
    std::set<AffineWeylElement> coset;
    for (const Permutation& u : WJ)
      for (const Permutation& v : WJ)
        coset.insert(AffineWeylElement::from_permutation(u) * m *
                     AffineWeylElement::from_permutation(v));
    if (cc.second != static_cast<long>(coset.size()))
      throw consistency_error("double coset of " + m.str() +
                              " only partially supported");
    out.add_value(m, cc.first);
  }
  return out;
}

ParahoricHeckeElement convolve_parahoric(const ParahoricHeckeElement& a,
                                         const ParahoricHeckeElement& b) {
  if (!(a.level() == b.level())) throw input_error("level mismatch in convolution");
  const LaurentScalar P = poincare_poly(a.level().blocks);
  IwahoriHeckeElement prod = a.to_iwahori() * b.to_iwahori();
  IwahoriHeckeElement reduced(prod.rank());
  for (const auto& [w, c] : prod.terms()) {
    auto d = c.divided_by(P);
    if (!d)
      throw consistency_error("convolution coefficient not divisible by the level's "
                              "Poincare polynomial at " + w.str());
    reduced.add_term(w, *d);
  }
  return parahoric_from_iwahori(reduced, a.level());
}

bool is_central(const ParahoricHeckeElement& h) {
  const ParahoricShape& J = h.level();
  const int n = h.rank();
  // The level-J algebra is generated by the simple-coset indicators and the
  // length-zero units: the indicator of J w J follows by induction on the
  // length of the minimal representative.
  std::vector<AffineWeylElement> gens;
  for (int i = 0; i < n; ++i) {
    AffineWeylElement rep = min_double_coset_rep(AffineWeylElement::simple(n, i), J);
    if (rep.length() > 0 || rep.omega_exponent() != 0) gens.push_back(rep);
  }
  gens.push_back(AffineWeylElement::omega(n));
  gens.push_back(AffineWeylElement::omega_power(n, -1));
  for (const AffineWeylElement& g : gens) {
    ParahoricHeckeElement ind(J);
    ind.add_value(min_double_coset_rep(g, J), LaurentScalar(1));
    if (!(convolve_parahoric(h, ind) == convolve_parahoric(ind, h))) return false;
  }
  return true;
}

IwahoriHeckeElement spherical_to_iwahori(const SphericalHeckeElement& f) {
  const int n = f.rank();
  const std::vector<Permutation> W = ParahoricShape::maximal(n).finite_weyl_elements();
  IwahoriHeckeElement out(n);
  for (const auto& [nu, c] : f.terms()) {
    std::set<AffineWeylElement> coset;
    const AffineWeylElement tnu = AffineWeylElement::translation(nu);
    for (const Permutation& u : W)
      for (const Permutation& v : W)
        coset.insert(AffineWeylElement::from_permutation(u) * tnu *
                     AffineWeylElement::from_permutation(v));
    for (const AffineWeylElement& w : coset) out.add_term(w, c);
  }
  return out;
}

SphericalHeckeElement spherical_from_iwahori(const IwahoriHeckeElement& h) {
  ParahoricHeckeElement p =
      parahoric_from_iwahori(h, ParahoricShape::maximal(h.rank()));
  SphericalHeckeElement out(h.rank());
  for (const auto& [w, c] : p.values()) out.add_term(w.spherical_image(), c);
  return out;
}

ParahoricHeckeElement spherical_as_parahoric(const SphericalHeckeElement& f) {
  ParahoricShape K = ParahoricShape::maximal(f.rank());
  ParahoricHeckeElement out(K);
  for (const auto& [mu, c] : f.terms())
    out.add_value(min_double_coset_rep(AffineWeylElement::translation(mu), K), c);
  return out;
}

SphericalHeckeElement bernstein_image(const ParahoricHeckeElement& h) {
  const int n = h.rank();
  const LaurentScalar P = poincare_poly(h.level().blocks);
  IwahoriHeckeElement prod =
      h.to_iwahori() * spherical_to_iwahori(SphericalHeckeElement::unit(n));
  IwahoriHeckeElement reduced(n);
  for (const auto& [w, c] : prod.terms()) {
    auto d = c.divided_by(P);
    if (!d)
      throw consistency_error(
          "spherical image coefficient not divisible by the level's Poincare "
          "polynomial at " + w.str());
    reduced.add_term(w, *d);
  }
  return spherical_from_iwahori(reduced);
}

ParahoricHeckeElement central_element_for(const SymLaurent& P, const ParahoricShape& J) {
  if (P.rank() != J.rank()) throw input_error("rank mismatch");
  const int n = J.rank();
  IwahoriHeckeElement Z(n);
  for (const auto& [mu, c] : expand_in_basis(P, SymBasis::monomial))
    Z = Z + bernstein_z(mu).scaled(c);
  ParahoricHeckeElement out =
      parahoric_from_iwahori(Z * ParahoricHeckeElement::unit(J).to_iwahori(), J);
  if (!is_central(out))
    throw consistency_error("central element construction produced a non-central "
                            "element at level " + J.str());
  if (!(satake(bernstein_image(out)) == P))
    throw consistency_error("central element has the wrong spherical image at level " +
                            J.str());
  return out;
}

LaurentScalar evaluate_at(const ParahoricHeckeElement& h, const LocalMatrix& g) {
  if (g.size() != h.rank()) throw input_error("matrix size does not match the level");
  const LatticeChain C = LatticeChain::standard(g.field(), h.level());
  return h.value(chain_relative_position(C, C.apply(g)));
}

std::pair<LaurentScalar, LaurentScalar> parahoric_volume(const ParahoricShape& J) {
  return {poincare_poly(J.blocks), poincare_poly({J.rank()})};
}

}  // namespace hecke
