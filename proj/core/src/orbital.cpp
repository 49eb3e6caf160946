#include "hecke/orbital.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "hecke/chain.hpp"
#include "hecke/lattice.hpp"
#include "hecke/symlaurent.hpp"

namespace hecke {

namespace {

std::vector<SeriesScalar> column_of(const LocalMatrix& M, int j) {
  std::vector<SeriesScalar> c;
  c.reserve(M.size());
  for (int i = 0; i < M.size(); ++i) c.push_back(M.at(i, j));
  return c;
}

// sigma acts on a chain through the coefficient Frobenius of every step basis.
LatticeChain chain_sigma(const LatticeChain& C) {
  std::vector<Lattice> steps;
  steps.reserve(C.steps().size());
  for (const auto& L : C.steps())
    steps.push_back(Lattice::from_columns(L.basis().frobenius()));
  return LatticeChain(C.shape(), std::move(steps));
}

// id, g, g^2, ..., g^{n-1}
std::vector<LocalMatrix> power_images(const LocalMatrix& g) {
  std::vector<LocalMatrix> out{LocalMatrix::identity(g.field(), g.size())};
  for (int j = 1; j < g.size(); ++j) out.push_back(out.back() * g);
  return out;
}

std::string poly_str(const std::vector<SeriesScalar>& lows) {
  std::ostringstream os;
  os << "X^" << lows.size();
  for (int i = static_cast<int>(lows.size()) - 1; i >= 0; --i) {
    if (lows[i].is_zero() && lows[i].exact()) continue;
    os << " + (" << lows[i].str() << ")";
    if (i > 0) os << " X^" << i;
  }
  return os.str();
}

// Remainder of p modulo monic d, both with residue-field index coefficients,
// constant term first.
std::vector<long> gf_poly_rem(std::vector<long> p, const std::vector<long>& d,
                              const GFPtr& k) {
  const size_t m = d.size() - 1;
  while (p.size() > m) {
    long lead = p.back();
    if (lead != 0) {
      size_t off = p.size() - 1 - m;
      for (size_t i = 0; i < m; ++i) p[off + i] = k->sub(p[off + i], k->mul(lead, d[i]));
    }
    p.pop_back();
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Trial division by every monic polynomial of degree at most n/2.
bool gf_poly_irreducible(const std::vector<long>& p, const GFPtr& k) {
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return false;
  for (int m = 1; 2 * m <= n; ++m) {
    long count = 1;
    for (int i = 0; i < m; ++i) count *= k->size();
    for (long code = 0; code < count; ++code) {
      std::vector<long> d(m + 1, 0);
      long c = code;
      for (int i = 0; i < m; ++i) {
        d[i] = c % k->size();
        c /= k->size();
      }
      d[m] = 1;
      if (gf_poly_rem(p, d, k).empty()) return false;
    }
  }
  return true;
}

// One orbit enumeration: the acting element, the coordinate algebra of its
// (norm's) characteristic polynomial over the ground field, and the images of
// the coordinate powers over the chain field.
struct WalkTask {
  const LocalMatrix* act = nullptr;
  const std::vector<LocalMatrix>* images = nullptr;
  const CentralizerAlgebra* alg = nullptr;
  const ParahoricHeckeElement* f = nullptr;
  bool twisted = false;
  int stretch = 1;
  int extra_margin = 0;
};

struct NodeEval {
  AffineWeylElement w;
  int dp = 0;
  LaurentScalar val;
};

// The complete chain refining the standard chain of the coefficient field:
// L_0 is the maximal-order span of e_1 (every nonzero vector is cyclic over a
// field), refined by successive maximal-ideal multiples, which drop dimension
// f at each of the e steps and close up at t L_0.
LatticeChain seed_complete_chain(const WalkTask& T) {
  const LocalField& F = T.act->field();
  const int n = T.act->size();
  const CentralizerAlgebra& A = *T.alg;
  auto image_matrix = [&](const LocalMatrix& coords, int j) {
    LocalMatrix m(F, n);
    for (int i = 0; i < n; ++i) {
      SeriesScalar c = T.twisted ? embed_series(coords.at(i, j), F) : coords.at(i, j);
      m = m + (*T.images)[i].scaled(c);
    }
    return m;
  };

  const LocalMatrix& MB = A.maximal_order().basis();
  std::vector<std::vector<SeriesScalar>> cols;
  for (int j = 0; j < n; ++j) cols.push_back(column_of(image_matrix(MB, j), 0));
  Lattice L0 = lattice_span(F, n, cols);

  const int e = A.ramification_index();
  const LocalMatrix& MI = A.maximal_ideal().basis();
  std::vector<Lattice> steps{L0};
  for (int k = 1; k <= e; ++k) {
    std::vector<std::vector<SeriesScalar>> prods;
    const LocalMatrix& prev = steps.back().basis();
    for (int j = 0; j < n; ++j) {
      LocalMatrix mp = image_matrix(MI, j) * prev;
      for (int c = 0; c < n; ++c) prods.push_back(column_of(mp, c));
    }
    steps.push_back(lattice_span(F, n, prods));
  }
  if (!(steps[static_cast<size_t>(e)] == L0.scaled_t(1)))
    throw consistency_error("seed chain: ideal refinement does not close up at t");
  steps.pop_back();
  LatticeChain pi_chain(ParahoricShape(std::vector<int>(static_cast<size_t>(e), A.residue_degree())),
                        std::move(steps));
  return pi_chain.refined();
}

NodeEval eval_node(const WalkTask& T, const LatticeChain& C) {
  LocalMatrix g = adapted_basis(C);
  LocalMatrix moved = T.twisted ? (*T.act) * g.frobenius() : (*T.act) * g;
  AffineWeylElement w = monomial_normal_form(g.inverse() * moved);
  return NodeEval{w, abs_sum(w.spherical_image()), T.f->value(w)};
}

// Shape-preserving elementary moves on a complete chain: replace one step
// inside the 2-dimensional quotient of its neighbours, plus both rotations.
std::vector<LatticeChain> chain_neighbors(const LatticeChain& C) {
  if (!C.shape().is_iwahori())
    throw consistency_error("chain neighbors: expected a complete chain");
  const LocalField& F = C.field();
  const int n = C.rank();
  const long kq = F.residue_size();
  std::vector<LatticeChain> out;

  for (int i = 0; i < n; ++i) {
    Lattice above = C.step_extended(i - 1);
    Lattice below = C.step_extended(i + 1);
    const LocalMatrix& BA = above.basis();
    std::vector<int> diag;
    hermite_columns(BA.inverse() * below.basis(), &diag);
    int j1 = -1, j2 = -1;
    for (int j = 0; j < n; ++j) {
      if (diag[j] == 0) continue;
      if (diag[j] != 1 || j2 >= 0)
        throw consistency_error("chain neighbors: quotient is not 2-dimensional");
      (j1 < 0 ? j1 : j2) = j;
    }
    if (j2 < 0) throw consistency_error("chain neighbors: quotient is not 2-dimensional");

    std::vector<std::vector<SeriesScalar>> base_cols;
    for (int j = 0; j < n; ++j) base_cols.push_back(column_of(below.basis(), j));
    auto add_candidate = [&](long a, long b) {
      SeriesScalar ca = SeriesScalar::monomial(F, a, 0);
      SeriesScalar cb = SeriesScalar::monomial(F, b, 0);
      std::vector<SeriesScalar> v;
      for (int row = 0; row < n; ++row)
        v.push_back(BA.at(row, j1) * ca + BA.at(row, j2) * cb);
      auto cols = base_cols;
      cols.push_back(std::move(v));
      Lattice Lp = lattice_span(F, n, cols);
      if (Lp == C.steps()[static_cast<size_t>(i)]) return;
      std::vector<Lattice> st = C.steps();
      st[static_cast<size_t>(i)] = std::move(Lp);
      out.emplace_back(C.shape(), std::move(st));
    };
    for (long x = 0; x < kq; ++x) add_candidate(1, x);
    add_candidate(0, 1);
  }

  {
    std::vector<Lattice> st(C.steps().begin() + 1, C.steps().end());
    st.push_back(C.steps()[0].scaled_t(1));
    out.emplace_back(C.shape(), std::move(st));
  }
  {
    std::vector<Lattice> st{C.steps()[static_cast<size_t>(n - 1)].scaled_t(-1)};
    st.insert(st.end(), C.steps().begin(), C.steps().end() - 1);
    out.emplace_back(C.shape(), std::move(st));
  }
  return out;
}

// {x in the coefficient field : iota(x) . C_s inside D_s for every step}, in
// power coordinates over the ground field.
Lattice transporter(const CentralizerAlgebra& A, const std::vector<LocalMatrix>& images,
                    const LatticeChain& C, const LatticeChain& D) {
  std::vector<std::vector<LocalMatrix>> blocks;
  for (int s = 0; s < C.length(); ++s) {
    LocalMatrix Dinv = D.steps()[static_cast<size_t>(s)].basis().inverse();
    std::vector<LocalMatrix> block;
    for (const auto& im : images)
      block.push_back(Dinv * im * C.steps()[static_cast<size_t>(s)].basis());
    blocks.push_back(std::move(block));
  }
  return A.coefficient_integrality_lattice(blocks);
}

// D lies in the coefficient-unit orbit of C (up to a t-power) exactly when
// the per-step covolume differences are one constant and the transporter
// contains an element whose norm valuation meets it; the minimum over a basis
// is the minimum over the lattice.
bool same_class_orbit(const CentralizerAlgebra& A, const std::vector<LocalMatrix>& images,
                      const LatticeChain& C, const LatticeChain& D) {
  int delta0 = D.steps()[0].det_valuation() - C.steps()[0].det_valuation();
  for (int s = 1; s < C.length(); ++s) {
    if (D.steps()[static_cast<size_t>(s)].det_valuation() -
            C.steps()[static_cast<size_t>(s)].det_valuation() !=
        delta0)
      return false;
  }
  return A.min_norm_valuation(transporter(A, images, C, D)) == delta0;
}

OrbitalValue run_walk(const WalkTask& T) {
  const LocalField& F = T.act->field();
  const int n = T.act->size();
  EnumerationCertificate cert;
  cert.precision = F.prec;
  if (T.f->is_zero()) return {RatioValue{}, cert};

  int max_support = 0;
  for (const auto& [w, c] : T.f->values())
    max_support = std::max(max_support, abs_sum(w.spherical_image()));

  LatticeChain seed = seed_complete_chain(T).normalized();
  NodeEval seed_eval = eval_node(T, seed);
  const int radius = std::max(max_support, seed_eval.dp) + 2 * n + 4 + T.extra_margin;
  cert.radius = radius;

  std::unordered_set<std::string> visited;
  std::deque<LatticeChain> queue;
  std::vector<std::pair<LatticeChain, LaurentScalar>> support;
  long evals = 0;

  auto consider = [&](LatticeChain C) {
    C = C.normalized();
    if (!visited.insert(C.str()).second) return;
    NodeEval e = eval_node(T, C);
    // periodic cross-check of the matrix route against the chain route
    if (++evals % 512 == 1) {
      LatticeChain D = (T.twisted ? chain_sigma(C) : C).apply(*T.act);
      if (!(chain_relative_position(C, D) == e.w))
        throw consistency_error("pair position: matrix and chain routes disagree");
      ++cert.route_checks;
    }
    if (!e.val.is_zero()) support.emplace_back(C, e.val);
    if (e.dp <= radius) {
      queue.push_back(std::move(C));
    } else {
      ++cert.frontier_discarded;
      if (!e.val.is_zero()) cert.frontier_clean = false;
    }
  };

  consider(seed);
  while (!queue.empty()) {
    LatticeChain C = std::move(queue.front());
    queue.pop_front();
    if (++cert.classes_expanded > (1l << 23))
      throw uncertified_error("orbit enumeration exceeded the class budget");
    for (auto& nb : chain_neighbors(C)) consider(std::move(nb));
  }
  cert.support_classes = static_cast<long>(support.size());

  // group the support into coefficient-unit orbits; the test is exact, so a
  // first matching representative settles membership
  std::vector<size_t> reps;
  std::vector<int> orbit_of(support.size(), -1);
  for (size_t i = 0; i < support.size(); ++i) {
    for (size_t k = 0; k < reps.size() && orbit_of[i] < 0; ++k) {
      if (same_class_orbit(*T.alg, *T.images, support[reps[k]].first, support[i].first)) {
        orbit_of[i] = static_cast<int>(k);
        if (!(support[i].second == support[reps[k]].second))
          throw consistency_error("orbit grouping: value is not constant on an orbit");
      }
    }
    if (orbit_of[i] < 0) {
      orbit_of[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  cert.orbit_count = static_cast<long>(reps.size());

  RatioValue total;
  for (size_t rep : reps) {
    const LatticeChain& C = support[rep].first;
    auto [vn, vd] = T.alg->unit_volume(transporter(*T.alg, *T.images, C, C));
    cert.stabilizer_volumes.push_back("(" + vn.str() + ") / (" + vd.str() + ")");
    total = total.plus(RatioValue{support[rep].second.stretch(T.stretch) * vd, vn});
  }
  // the walk decomposes over complete chains: vol = 1 / P_{S_n}(q) per class
  total = total.times(RatioValue{LaurentScalar(1), poincare_poly({n}).stretch(T.stretch)});
  return {total, cert};
}

}  // namespace

RatioValue RatioValue::plus(const RatioValue& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

RatioValue RatioValue::times(const RatioValue& o) const {
  return {num * o.num, den * o.den};
}

bool RatioValue::equals_specialized(const RatioValue& o, long q) const {
  if (den.is_zero() || o.den.is_zero())
    throw consistency_error("RatioValue: zero denominator");
  return (num * o.den - o.num * den).specialize(q).is_zero();
}

std::string RatioValue::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

std::string EllipticityCertificate::str() const {
  switch (kind) {
    case Kind::residue_irreducible:
      return "irreducible residue polynomial";
    case Kind::shifted_eisenstein:
      return "Eisenstein after X -> t^" + std::to_string(shift) + " X";
    case Kind::odd_discriminant:
      return "odd discriminant valuation";
  }
  return "";
}

std::optional<EllipticityCertificate> certify_elliptic(
    const std::vector<SeriesScalar>& low_coeffs) {
  if (low_coeffs.empty()) throw input_error("certify_elliptic: empty polynomial");
  const LocalField& F = low_coeffs[0].field();
  const int n = static_cast<int>(low_coeffs.size());
  // lower bound for the valuation; a capped zero is only known above its cap
  auto vlb = [](const SeriesScalar& c) {
    return c.is_zero() ? (c.exact() ? SeriesScalar::kExactCap : c.cap()) : c.valuation();
  };

  bool integral = true;
  std::vector<long> rbar(static_cast<size_t>(n) + 1, 0);
  rbar[static_cast<size_t>(n)] = 1;
  for (int i = 0; i < n && integral; ++i) {
    const SeriesScalar& c = low_coeffs[static_cast<size_t>(i)];
    if (vlb(c) < 0) {
      integral = false;
    } else if (c.known_nonzero() && c.valuation() == 0) {
      rbar[static_cast<size_t>(i)] = c.coeff(0);
    }
  }
  if (integral && gf_poly_irreducible(rbar, F.k))
    return EllipticityCertificate{EllipticityCertificate::Kind::residue_irreducible, 0};

  // Eisenstein after X -> t^s X, rescaled monic: lower coefficients need
  // val(c_i) + (i - n) s >= 1 and the constant term val(c_0) = n s + 1
  if (low_coeffs[0].known_nonzero()) {
    for (int s = 0; s <= 6; ++s) {
      bool ok = low_coeffs[0].valuation() == n * s + 1;
      for (int i = 1; i < n && ok; ++i)
        ok = vlb(low_coeffs[static_cast<size_t>(i)]) + (i - n) * s >= 1;
      if (ok)
        return EllipticityCertificate{EllipticityCertificate::Kind::shifted_eisenstein, s};
    }
  }

  // quadratic over odd residue characteristic: ramified exactly when the
  // discriminant valuation is odd
  if (n == 2 && F.k->characteristic() != 2) {
    SeriesScalar disc =
        low_coeffs[1] * low_coeffs[1] - SeriesScalar::from_int(F, 4) * low_coeffs[0];
    if (disc.known_nonzero() && disc.valuation() % 2 != 0)
      return EllipticityCertificate{EllipticityCertificate::Kind::odd_discriminant, 0};
  }
  return std::nullopt;
}

OrbitalValue orbital_integral(const LocalMatrix& gamma, const ParahoricHeckeElement& f,
                              int extra_margin) {
  const LocalField& F = gamma.field();
  if (F.r != 1)
    throw input_error("orbital_integral: the element must live over the ground field");
  if (f.rank() != gamma.size()) throw input_error("orbital_integral: rank mismatch");
  if (!is_regular_ss_separable(gamma))
    throw input_error("orbital_integral: element is not regular semisimple separable");
  std::vector<SeriesScalar> cp = gamma.charpoly();
  std::vector<SeriesScalar> lows(cp.begin(), cp.end() - 1);
  if (!certify_elliptic(lows))
    throw uncertified_error("orbital_integral: ellipticity not certified for " +
                            poly_str(lows));
  CentralizerAlgebra A(F, lows);
  std::vector<LocalMatrix> images = power_images(gamma);
  WalkTask T{&gamma, &images, &A, &f, false, 1, extra_margin};
  return run_walk(T);
}

OrbitalValue twisted_orbital_integral(const LocalMatrix& delta,
                                      const ParahoricHeckeElement& phi, int r,
                                      int extra_margin) {
  const LocalField& E = delta.field();
  if (r < 1 || E.r != r)
    throw input_error("twisted_orbital_integral: extension degree mismatch");
  if (phi.rank() != delta.size())
    throw input_error("twisted_orbital_integral: rank mismatch");
  LocalMatrix N = norm_map(delta, r);
  if (!is_regular_ss_separable(N))
    throw input_error("twisted_orbital_integral: norm is not regular semisimple separable");
  std::vector<SeriesScalar> cp = N.charpoly();
  const LocalField base = E.base();
  std::vector<SeriesScalar> lows;
  for (size_t i = 0; i + 1 < cp.size(); ++i)
    lows.push_back(project_series(cp[i], base));
  if (!certify_elliptic(lows))
    throw uncertified_error("twisted_orbital_integral: ellipticity not certified for " +
                            poly_str(lows));
  CentralizerAlgebra A(base, lows);
  std::vector<LocalMatrix> images = power_images(N);
  WalkTask T{&delta, &images, &A, &phi, true, r, extra_margin};
  return run_walk(T);
}

bool saito_shintani_check(const std::vector<std::vector<std::vector<Rational>>>& factors) {
  const int r = static_cast<int>(factors.size());
  if (r < 1) throw input_error("saito_shintani_check: need at least one factor");
  const int d = static_cast<int>(factors[0].size());
  long dim = 1;
  for (const auto& T : factors) {
    if (static_cast<int>(T.size()) != d)
      throw input_error("saito_shintani_check: factor sizes differ");
    for (const auto& row : T)
      if (static_cast<int>(row.size()) != d)
        throw input_error("saito_shintani_check: factor is not square");
    dim *= d;
    if (dim > 1024)
      throw input_error("saito_shintani_check: tensor dimension too large");
  }

  std::vector<std::vector<Rational>> prod = factors[0];
  for (int m = 1; m < r; ++m) {
    std::vector<std::vector<Rational>> next(static_cast<size_t>(d),
                                            std::vector<Rational>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (prod[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
        for (int j = 0; j < d; ++j)
          next[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              prod[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              factors[static_cast<size_t>(m)][static_cast<size_t>(k)][static_cast<size_t>(j)];
      }
    prod = std::move(next);
  }
  Rational trace_prod = 0;
  for (int i = 0; i < d; ++i) trace_prod += prod[static_cast<size_t>(i)][static_cast<size_t>(i)];

  // the d^r by d^r matrix of (T_1 x ... x T_r) composed with the shift that
  // sends factor m+1 to factor m
  auto digits = [&](long idx) {
    std::vector<int> e(static_cast<size_t>(r));
    for (int m = r - 1; m >= 0; --m) {
      e[static_cast<size_t>(m)] = static_cast<int>(idx % d);
      idx /= d;
    }
    return e;
  };
  Rational trace_big = 0;
  std::vector<std::vector<Rational>> big(static_cast<size_t>(dim),
                                         std::vector<Rational>(static_cast<size_t>(dim), 0));
  for (long a = 0; a < dim; ++a) {
    std::vector<int> ia = digits(a);
    for (long b = 0; b < dim; ++b) {
      std::vector<int> jb = digits(b);
      Rational v = 1;
      for (int m = 0; m < r && v != 0; ++m)
        v *= factors[static_cast<size_t>(m)][static_cast<size_t>(ia[static_cast<size_t>(m)])]
                    [static_cast<size_t>(jb[static_cast<size_t>((m + 1) % r)])];
      big[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(v);
    }
  }
  for (long a = 0; a < dim; ++a)
    trace_big += big[static_cast<size_t>(a)][static_cast<size_t>(a)];
  return trace_big == trace_prod;
}

FLReport verify_fl(const LocalMatrix& delta,
                   const std::vector<std::pair<Coweight, LaurentScalar>>& coeffs,
                   const ParahoricShape& J, int r) {
  const LocalField& E = delta.field();
  const int n = delta.size();
  if (r < 1 || E.r != r) throw input_error("verify_fl: extension degree mismatch");
  if (J.rank() != n) throw input_error("verify_fl: level rank mismatch");
  if (coeffs.empty()) throw input_error("verify_fl: empty test function");

  LocalMatrix N = norm_map(delta, r);
  if (!is_regular_ss_separable(N))
    throw input_error("verify_fl: norm is not regular semisimple separable");
  std::vector<SeriesScalar> cp = N.charpoly();
  const LocalField base = E.base();
  std::vector<SeriesScalar> lows;
  for (size_t i = 0; i + 1 < cp.size(); ++i)
    lows.push_back(project_series(cp[i], base));
  auto cert = certify_elliptic(lows);
  if (!cert)
    throw uncertified_error("verify_fl: ellipticity not certified for " + poly_str(lows));

  SymLaurent P(n);
  for (const auto& [mu, c] : coeffs) {
    if (static_cast<int>(mu.size()) != n)
      throw input_error("verify_fl: coweight rank mismatch");
    P += schur(n, mu) * c;
  }
  ParahoricHeckeElement psi = central_element_for(P, J);

  OrbitalValue left = twisted_orbital_integral(delta, psi, r);
  TaggedParahoric down = bc_central_parahoric(TaggedParahoric{FieldTag{E.q, r}, psi}, r);
  LocalMatrix gammaF = LocalMatrix::companion(base, lows);
  OrbitalValue right = orbital_integral(gammaF, down.elem);

  FLReport rep;
  rep.n = n;
  rep.q = E.q;
  rep.r = r;
  rep.level = J;
  rep.delta = delta.str();
  rep.psi_coeffs = coeffs;
  rep.norm_charpoly = poly_str(lows);
  rep.ellipticity = cert->str();
  rep.twisted = left.value;
  rep.plain = right.value;
  rep.twisted_certificate = left.certificate;
  rep.plain_certificate = right.certificate;
  rep.inconclusive =
      !(left.certificate.certified() && right.certificate.certified());
  rep.equal = !rep.inconclusive && left.value.equals_specialized(right.value, E.q);
  return rep;
}

std::uint64_t SplitMix::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

long SplitMix::below(long n) {
  if (n <= 0) throw input_error("SplitMix::below: n must be positive");
  return static_cast<long>(
      (static_cast<unsigned __int128>(next()) * static_cast<std::uint64_t>(n)) >> 64);
}

LocalMatrix sample_delta(const LocalField& E, int n, std::uint64_t seed) {
  if (n < 2) throw input_error("sample_delta: rank must be at least 2");
  SplitMix rng(seed);
  const long kq = E.residue_size();
  for (int attempt = 0; attempt < 5000; ++attempt) {
    LocalMatrix delta(E, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SeriesScalar entry = SeriesScalar::zero(E);
        for (int e = 0; e <= 2; ++e)
          entry = entry + SeriesScalar::monomial(E, rng.below(kq), e);
        delta.at(i, j) = entry;
      }
    SeriesScalar det = delta.det();
    if (!det.known_nonzero() || det.valuation() != 0) continue;
    LocalMatrix N = norm_map(delta, E.r);
    if (!is_regular_ss_separable(N)) continue;
    std::vector<SeriesScalar> cp = N.charpoly();
    const LocalField base = E.base();
    std::vector<SeriesScalar> lows;
    for (size_t i = 0; i + 1 < cp.size(); ++i)
      lows.push_back(project_series(cp[i], base));
    if (certify_elliptic(lows)) return delta;
  }
  throw uncertified_error(
      "sample_delta: no certified elliptic norm within the attempt budget");
}

RatioValue tree_orbital_unit_gl2(const LocalMatrix& gamma) {
  const LocalField& F = gamma.field();
  if (gamma.size() != 2 || F.r != 1)
    throw input_error("tree_orbital_unit_gl2: needs a 2 x 2 ground-field element");
  if (!is_regular_ss_separable(gamma))
    throw input_error("tree_orbital_unit_gl2: element is not regular semisimple separable");
  std::vector<SeriesScalar> cp = gamma.charpoly();
  std::vector<SeriesScalar> lows(cp.begin(), cp.end() - 1);
  if (!certify_elliptic(lows))
    throw uncertified_error("tree_orbital_unit_gl2: ellipticity not certified for " +
                            poly_str(lows));
  CentralizerAlgebra A(F, lows);
  std::vector<LocalMatrix> images = power_images(gamma);

  auto position = [&](const Lattice& L) { return relative_position(L, L.apply(gamma)); };
  Lattice seed = Lattice::standard(F, 2);
  const int radius = abs_sum(position(seed)) + 8;

  std::unordered_set<std::string> visited;
  std::deque<Lattice> queue;
  std::vector<Lattice> fixed;
  auto consider = [&](Lattice L) {
    L = L.normalized();
    if (!visited.insert(L.str()).second) return;
    Coweight pos = position(L);
    bool is_fixed = pos == Coweight{0, 0};
    if (is_fixed) fixed.push_back(L);
    if (abs_sum(pos) <= radius) {
      queue.push_back(std::move(L));
    } else if (is_fixed) {
      throw uncertified_error("tree enumeration: fixed class beyond the certified radius");
    }
  };

  consider(seed);
  long expanded = 0;
  while (!queue.empty()) {
    Lattice L = std::move(queue.front());
    queue.pop_front();
    if (++expanded > (1l << 20))
      throw uncertified_error("tree enumeration exceeded the class budget");
    // every lattice between t L and t^-1 L, by Hermite parameters over t^-1 L
    LocalMatrix up = L.scaled_t(-1).basis();
    Lattice floor_l = L.scaled_t(1);
    for (int a = 0; a <= 2; ++a) {
      long ucount = 1;
      for (int i = 0; i < a; ++i) ucount *= F.residue_size();
      for (int b = 0; b <= 2; ++b) {
        for (long code = 0; code < ucount; ++code) {
          std::vector<long> uc(static_cast<size_t>(a), 0);
          long cc = code;
          for (int i = 0; i < a; ++i) {
            uc[static_cast<size_t>(i)] = cc % F.residue_size();
            cc /= F.residue_size();
          }
          LocalMatrix H(F, 2);
          H.at(0, 0) = SeriesScalar::t_power(F, a);
          H.at(1, 1) = SeriesScalar::t_power(F, b);
          H.at(0, 1) = SeriesScalar::from_poly(F, 0, uc);
          H.at(1, 0) = SeriesScalar::zero(F);
          Lattice cand = Lattice::from_columns(up * H);
          if (cand == L || !cand.contains(floor_l)) continue;
          consider(cand);
        }
      }
    }
  }

  // orbits of fixed classes, as one-step chains; volumes by unit counting in
  // a finite quotient, normalized against the reference order
  ParahoricShape vertex_shape = ParahoricShape::maximal(2);
  auto as_chain = [&](const Lattice& L) {
    return LatticeChain(vertex_shape, std::vector<Lattice>{L});
  };
  std::vector<Lattice> reps;
  for (const auto& L : fixed) {
    bool grouped = false;
    for (const auto& R : reps)
      if (same_class_orbit(A, images, as_chain(R), as_chain(L))) {
        grouped = true;
        break;
      }
    if (!grouped) reps.push_back(L);
  }

  auto unit_count = [&](const Lattice& X, int c) {
    std::vector<int> diag;
    hermite_columns(X.basis().inverse() * A.maximal_order().scaled_t(c).basis(), &diag);
    long count = 1;
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < diag[static_cast<size_t>(j)]; ++i) count *= F.residue_size();
    if (count > (1l << 22))
      throw uncertified_error("unit counting: quotient too large");
    long units = 0;
    for (long code = 1; code < count; ++code) {
      long cc = code;
      std::vector<SeriesScalar> coords(2, SeriesScalar::zero(F));
      for (int j = 0; j < 2; ++j) {
        std::vector<long> digits_j(static_cast<size_t>(diag[static_cast<size_t>(j)]), 0);
        for (int i = 0; i < diag[static_cast<size_t>(j)]; ++i) {
          digits_j[static_cast<size_t>(i)] = cc % F.residue_size();
          cc /= F.residue_size();
        }
        coords[static_cast<size_t>(j)] = SeriesScalar::from_poly(F, 0, digits_j);
      }
      std::vector<SeriesScalar> x(2, SeriesScalar::zero(F));
      bool zero = true;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j)
          x[static_cast<size_t>(i)] =
              x[static_cast<size_t>(i)] + X.basis().at(i, j) * coords[static_cast<size_t>(j)];
        zero = zero && x[static_cast<size_t>(i)].is_zero();
      }
      if (!zero && A.norm_valuation(x) == 0) ++units;
    }
    return units;
  };

  RatioValue total;
  for (const auto& L : reps) {
    Lattice R = transporter(A, images, as_chain(L), as_chain(L));
    const Lattice& ref = A.reference_order();
    int c = 1;
    while (c < 50 && !(R.contains(A.maximal_order().scaled_t(c)) &&
                       ref.contains(A.maximal_order().scaled_t(c))))
      ++c;
    if (c >= 50) throw consistency_error("unit counting: no common depth found");
    long in_r = unit_count(R, c);
    long in_ref = unit_count(ref, c);
    total = total.plus(RatioValue{LaurentScalar(Int(in_ref)), LaurentScalar(Int(in_r))});
  }
  return total;
}

}  // namespace hecke
