#include "doctest.h"

#include <set>
#include <vector>

#include "hecke/centralizer.hpp"
#include "hecke/chain.hpp"
#include "hecke/lattice.hpp"
#include "hecke/localmatrix.hpp"
#include "hecke/orbital.hpp"
#include "hecke/series.hpp"

using namespace hecke;

namespace {

SeriesScalar random_series(SplitMix& rng, const LocalField& F, int lo, int len) {
  std::vector<long> c;
  for (int i = 0; i < len; ++i) c.push_back(rng.below(F.residue_size()));
  return SeriesScalar::from_poly(F, lo, std::move(c));
}

// Random element of GL_n(O): integral entries, determinant a unit.
LocalMatrix random_unimodular(SplitMix& rng, const LocalField& F, int n) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    LocalMatrix g(F, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = random_series(rng, F, 0, 3);
    const SeriesScalar d = g.det();
    if (d.known_nonzero() && d.valuation() == 0) return g;
  }
  throw std::logic_error("random_unimodular: no unit determinant found");
}

LocalMatrix random_invertible(SplitMix& rng, const LocalField& F, int n) {
  LocalMatrix g = random_unimodular(rng, F, n);
  // Sprinkle t-powers to vary the elementary divisors.
  LocalMatrix d = LocalMatrix::identity(F, n);
  for (int i = 0; i < n; ++i)
    d.at(i, i) = SeriesScalar::t_power(F, static_cast<int>(rng.below(5)) - 2);
  return g * d * random_unimodular(rng, F, n);
}

}  // namespace

TEST_CASE("small field tables") {
  auto F4 = gf_table(4);
  CHECK(F4->characteristic() == 2);
  CHECK(F4->degree() == 2);
  // With modulus X^2 + X + 1: g * g = g + 1 for either primitive element.
  long g = F4->generator();
  CHECK(F4->mul(g, g) == F4->add(g, 1));
  CHECK(F4->pow(g, 3) == 1);

  auto F9 = gf_table(9);
  for (long a = 1; a < 9; ++a) {
    CHECK(F9->mul(a, F9->inv(a)) == 1);
    CHECK(F9->pow(a, 8) == 1);
  }
  // Field axioms on sampled triples in F_8.
  auto F8 = gf_table(8);
  SplitMix rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    long a = rng.below(8), b = rng.below(8), c = rng.below(8);
    CHECK(F8->mul(a, F8->add(b, c)) == F8->add(F8->mul(a, b), F8->mul(a, c)));
    CHECK(F8->mul(a, b) == F8->mul(b, a));
  }
}

TEST_CASE("subfield embedding respects arithmetic") {
  GFEmbedding emb(gf_table(2), gf_table(4));
  CHECK(emb.embed(0) == 0);
  CHECK(emb.embed(1) == 1);
  GFEmbedding emb39(gf_table(3), gf_table(9));
  auto F3 = gf_table(3);
  auto F9 = gf_table(9);
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      CHECK(emb39.embed(F3->mul(a, b)) == F9->mul(emb39.embed(a), emb39.embed(b)));
      CHECK(emb39.embed(F3->add(a, b)) == F9->add(emb39.embed(a), emb39.embed(b)));
      CHECK(emb39.project(emb39.embed(a)) == a);
    }
}

TEST_CASE("series arithmetic and truncation bookkeeping") {
  LocalField F(2, 1, 12);
  SeriesScalar one = SeriesScalar::one(F);
  SeriesScalar x = SeriesScalar::from_poly(F, 0, {1, 1});  // 1 + t

  SeriesScalar inv = x.inverse();
  CHECK(inv.cap() >= F.prec);
  // (1+t)^-1 = 1 + t + t^2 + ... in characteristic 2.
  for (int e = 0; e < inv.cap() && e < 12; ++e) CHECK(inv.coeff(e) == 1);
  CHECK((x * inv).matches(one));

  SeriesScalar tp = SeriesScalar::t_power(F, 3);
  CHECK(tp.valuation() == 3);
  CHECK((tp * tp).valuation() == 6);
  CHECK(x.shifted(2).valuation() == 2);

  // Exact values stay exact under ring operations.
  CHECK((x * x + tp).exact());
  CHECK(!inv.exact());
}

TEST_CASE("series frobenius fixes the prime field and has order r") {
  LocalField E(2, 2, 16);
  SeriesScalar a = SeriesScalar::monomial(E, gf_table(4)->generator(), 1);
  SeriesScalar b = a + SeriesScalar::one(E);
  CHECK(!same_series(b.frobenius(), b));
  CHECK(same_series(b.frobenius_power(2), b));
  CHECK(b.over_base() == false);
  CHECK(SeriesScalar::from_poly(E, 0, {1, 1}).over_base());
}

TEST_CASE("extension transport round trips") {
  LocalField F(3, 1, 10);
  LocalField E(3, 2, 10);
  SeriesScalar x = SeriesScalar::from_poly(F, -1, {2, 0, 1});
  SeriesScalar y = embed_series(x, E);
  CHECK(y.over_base());
  CHECK(same_series(project_series(y, F), x));
}

TEST_CASE("matrix inverse and determinant") {
  SplitMix rng(5);
  for (long q : {2L, 4L}) {
    LocalField F(q == 4 ? 2 : q, q == 4 ? 2 : 1, 14);
    for (int n : {2, 3}) {
      for (int trial = 0; trial < 8; ++trial) {
        LocalMatrix g = random_invertible(rng, F, n);
        CHECK((g * g.inverse()).matches(LocalMatrix::identity(F, n)));
        LocalMatrix h = random_invertible(rng, F, n);
        SeriesScalar dd = (g * h).det() - g.det() * h.det();
        CHECK(!dd.known_nonzero());
      }
    }
  }
}

TEST_CASE("characteristic polynomial via trace and determinant") {
  LocalField F(5, 1, 10);
  LocalMatrix g(F, 2);
  g.at(0, 0) = SeriesScalar::from_int(F, 2);
  g.at(0, 1) = SeriesScalar::t_power(F, 1);
  g.at(1, 0) = SeriesScalar::one(F);
  g.at(1, 1) = SeriesScalar::from_poly(F, 0, {3, 1});
  auto cp = g.charpoly();
  REQUIRE(cp.size() == 3);
  CHECK(same_series(cp[2], SeriesScalar::one(F)));
  CHECK(same_series(cp[1], -g.trace()));
  CHECK(same_series(cp[0], g.det()));
  // Cayley-Hamilton.
  LocalMatrix zero = poly_eval(cp, g);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(!zero.at(i, j).known_nonzero());
}

TEST_CASE("hermite form is unimodular-invariant") {
  SplitMix rng(9);
  LocalField F(2, 1, 14);
  for (int trial = 0; trial < 10; ++trial) {
    LocalMatrix g = random_invertible(rng, F, 3);
    std::vector<int> diag;
    LocalMatrix h = hermite_columns(g, &diag);
    // Column operations preserve the lattice: same Hermite basis again.
    std::vector<int> diag2;
    LocalMatrix h2 = hermite_columns(g * random_unimodular(rng, F, 3), &diag2);
    CHECK(h.matches(h2));
    CHECK(diag == diag2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j) CHECK(!h.at(i, j).known_nonzero());
  }
}

TEST_CASE("smith exponents are bi-invariant and match the normal form") {
  SplitMix rng(21);
  LocalField F(3, 1, 14);
  for (int trial = 0; trial < 10; ++trial) {
    LocalMatrix g = random_invertible(rng, F, 2);
    auto s = smith_exponents(g);
    auto s2 = smith_exponents(random_unimodular(rng, F, 2) * g * random_unimodular(rng, F, 2));
    CHECK(s == s2);
    CHECK(monomial_normal_form(g).spherical_image() == s);
  }
  LocalMatrix d = LocalMatrix::diagonal_t(F, {1, 3, -2});
  CHECK(smith_exponents(d) == Coweight{3, 1, -2});
}

TEST_CASE("lattices in hermite form") {
  LocalField F(2, 1, 14);
  Lattice L = Lattice::standard(F, 2);
  CHECK(L.contains(L.scaled_t(1)));
  CHECK(!L.scaled_t(1).contains(L));
  CHECK(L.normalized() == L);
  CHECK(L.scaled_t(5).normalized().det_valuation() < 2);

  SplitMix rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    LocalMatrix g = random_invertible(rng, F, 2);
    Lattice M = L.apply(g);
    CHECK(M == Lattice::from_columns(g));
    // The relative position of (L, gL) is the coset invariant of g.
    CHECK(relative_position(L, M) == smith_exponents(g));
    LocalMatrix u = random_unimodular(rng, F, 2);
    CHECK(M.apply(u).basis().matches(hermite_columns(u * M.basis(), nullptr)));
  }
}

TEST_CASE("lattice span tolerates redundant generators") {
  LocalField F(2, 1, 14);
  Lattice L = Lattice::standard(F, 2).scaled_t(1);
  std::vector<std::vector<SeriesScalar>> cols;
  cols.push_back({SeriesScalar::t_power(F, 1), SeriesScalar::zero(F)});
  cols.push_back({SeriesScalar::zero(F), SeriesScalar::t_power(F, 1)});
  cols.push_back({SeriesScalar::t_power(F, 2), SeriesScalar::t_power(F, 3)});
  CHECK(lattice_span(F, 2, cols) == L);
}

TEST_CASE("standard chains and refinement") {
  LocalField F(2, 1, 14);
  auto K = LatticeChain::standard(F, ParahoricShape::maximal(3));
  CHECK(K.length() == 1);
  auto I = K.refined();
  CHECK(I.length() == 3);
  CHECK(I.shape().is_iwahori());
  for (int i = 0; i + 1 < 3; ++i) CHECK(I.steps()[i].contains(I.steps()[i + 1]));
  CHECK(I.steps()[0] == K.steps()[0]);
  CHECK(I.step_extended(3) == I.steps()[0].scaled_t(1));
}

TEST_CASE("pair invariant: matrix route equals chain route") {
  SplitMix rng(29);
  for (long size : {2L, 4L}) {
    LocalField F(2, size == 4 ? 2 : 1, 16);
    for (int n : {2, 3}) {
      auto I = LatticeChain::standard(F, ParahoricShape::iwahori(n));
      auto K = LatticeChain::standard(F, ParahoricShape::maximal(n));
      for (int trial = 0; trial < 6; ++trial) {
        LocalMatrix g = random_invertible(rng, F, n);
        AffineWeylElement w = monomial_normal_form(g);
        CHECK(chain_relative_position(I, I.apply(g)) ==
              min_double_coset_rep(w, ParahoricShape::iwahori(n)));
        CHECK(chain_relative_position(K, K.apply(g)) ==
              min_double_coset_rep(w, ParahoricShape::maximal(n)));
      }
    }
  }
}

TEST_CASE("adapted basis reproduces its chain") {
  SplitMix rng(31);
  LocalField F(2, 1, 16);
  auto I = LatticeChain::standard(F, ParahoricShape::iwahori(2));
  for (int trial = 0; trial < 8; ++trial) {
    LocalMatrix g = random_invertible(rng, F, 2);
    LatticeChain C = I.apply(g).normalized();
    LocalMatrix b = adapted_basis(C);
    CHECK(I.apply(b) == C);
  }
}

TEST_CASE("norm map composes conjugates") {
  LocalField E(2, 2, 12);
  SplitMix rng(37);
  LocalMatrix d = random_unimodular(rng, E, 2);
  LocalMatrix nm = norm_map(d, 2);
  CHECK(nm.matches(d * d.frobenius()));
  // The characteristic polynomial of the norm is frobenius-stable.
  for (const auto& c : nm.charpoly()) {
    SeriesScalar diff = c - c.frobenius();
    CHECK(!diff.known_nonzero());
  }
}

TEST_CASE("regular semisimple separability detector") {
  LocalField F(2, 1, 12);
  LocalMatrix split = LocalMatrix::diagonal_t(F, {0, 1});
  CHECK(is_regular_ss_separable(split));
  LocalMatrix central = LocalMatrix::identity(F, 2);
  CHECK(!is_regular_ss_separable(central));
  std::vector<SeriesScalar> low = {SeriesScalar::from_poly(F, 0, {1, 1}),
                                   SeriesScalar::one(F)};
  CHECK(is_regular_ss_separable(LocalMatrix::companion(F, low)));
}
