#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/orbital.hpp"
#include "hecke/symlaurent.hpp"

using namespace hecke;

namespace {

SymLaurent sym_one(int rank) {
  SymLaurent out(rank);
  out.set_coeff(Coweight(rank, 0), LaurentScalar(1));
  return out;
}

// Complete homogeneous polynomial h_k as a sum of monomial symmetric
// functions, built directly from the multiset definition; independent of the
// Jacobi-Trudi route used by the library's schur().
SymLaurent homogeneous_oracle(int rank, int k) {
  SymLaurent out(rank);
  struct Frame {
    Coweight prefix;
    int remaining;
    int cap;
  };
  std::vector<Frame> todo{{Coweight{}, k, k}};
  while (!todo.empty()) {
    Frame fr = todo.back();
    todo.pop_back();
    if (static_cast<int>(fr.prefix.size()) == rank) {
      if (fr.remaining == 0) out.set_coeff(fr.prefix, LaurentScalar(1));
      continue;
    }
    for (int x = std::min(fr.cap, fr.remaining); x >= 0; --x) {
      Coweight next = fr.prefix;
      next.push_back(x);
      todo.push_back({next, fr.remaining - x, x});
    }
  }
  return out;
}

SymLaurent schur_oracle(int rank, const Coweight& la) {
  // Jacobi-Trudi: s_la = det(h_{la_i - i + j}), h_0 = 1, h_{<0} = 0.
  const int n = rank;
  std::vector<std::vector<SymLaurent>> H(n, std::vector<SymLaurent>(n, SymLaurent(rank)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = la[i] - i + j;
      if (k == 0)
        H[i][j] = sym_one(rank);
      else if (k > 0)
        H[i][j] = homogeneous_oracle(rank, k);
    }
  // Leibniz expansion over all permutations; n <= 3 keeps this cheap.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  SymLaurent det(rank);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    SymLaurent term = sym_one(rank);
    for (int i = 0; i < n; ++i) term = term * H[i][perm[i]];
    if (inv % 2)
      det -= term;
    else
      det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("laurent scalar ring identities") {
  SplitMix rng(7);
  auto random_scalar = [&] {
    LaurentScalar c;
    for (int k = 0; k < 3; ++k)
      c += LaurentScalar::term(Int(rng.below(11) - 5), static_cast<int>(rng.below(7)) - 3);
    return c;
  };
  for (int trial = 0; trial < 50; ++trial) {
    LaurentScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
  CHECK(LaurentScalar(3) * LaurentScalar::v_power(-2) == LaurentScalar::term(3, -2));
}

TEST_CASE("laurent scalar stretch and exact division") {
  LaurentScalar a = LaurentScalar::term(2, 1) + LaurentScalar::term(-1, 3);
  CHECK(a.stretch(2) == LaurentScalar::term(2, 2) + LaurentScalar::term(-1, 6));

  LaurentScalar p = q_power(2) - LaurentScalar(1);  // q^2 - 1
  LaurentScalar d = q_power(1) - LaurentScalar(1);  // q - 1
  auto quot = p.divided_by(d);
  REQUIRE(quot.has_value());
  CHECK(*quot == q_power(1) + LaurentScalar(1));
  CHECK(!(q_power(1) + LaurentScalar(1)).divided_by(d).has_value());
}

TEST_CASE("poincare polynomials of block subgroups") {
  CHECK(poincare_poly({1, 1}) == LaurentScalar(1));
  CHECK(poincare_poly({2}) == LaurentScalar(1) + q_power(1));
  // S_3: 1 + 2q + 2q^2 + q^3
  LaurentScalar s3 = LaurentScalar(1) + q_power(1) * LaurentScalar(2) +
                     q_power(2) * LaurentScalar(2) + q_power(3);
  CHECK(poincare_poly({3}) == s3);
  CHECK(poincare_poly({2, 1}) == poincare_poly({2}));
}

TEST_CASE("specialization at a residue size") {
  // v^2 = q turns q^2 - 1 into 8 at q = 3.
  LaurentScalar p = q_power(2) - LaurentScalar(1);
  QuadValue val = p.specialize(3);
  CHECK(val.a == Int(8));
  CHECK(val.b == Int(0));
  CHECK(val.dexp == 0);

  // v^-2 = 1/q keeps an exact denominator exponent.
  QuadValue inv = LaurentScalar::v_power(-2).specialize(3);
  CHECK(inv.a == Int(1));
  CHECK(inv.dexp == 1);
}

TEST_CASE("schur polynomials against the Jacobi-Trudi oracle") {
  for (int rank : {2, 3}) {
    std::vector<Coweight> shapes;
    if (rank == 2)
      shapes = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}};
    else
      shapes = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {2, 2, 1}};
    for (const Coweight& la : shapes) CHECK(schur(rank, la) == schur_oracle(rank, la));
  }
}

TEST_CASE("schur with negative entries is a determinant twist") {
  // s_{la - (1,..,1)} = (x_1 .. x_n)^{-1} s_la.
  SymLaurent shifted = schur(2, {0, -1});
  SymLaurent plain = schur(2, {1, 0});
  SymLaurent det_inv(2);
  det_inv.set_coeff({-1, -1}, LaurentScalar(1));
  CHECK(shifted == plain * det_inv);
}

TEST_CASE("symmetric ring operations") {
  SymLaurent a = schur(2, {1, 0}), b = schur(2, {1, 1});
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);

  // Pieri: s_(1,0)^2 = s_(2,0) + s_(1,1).
  CHECK(a * a == schur(2, {2, 0}) + schur(2, {1, 1}));
}

TEST_CASE("power substitution stretches exponents and coefficients") {
  SymLaurent a(2);
  a.set_coeff({1, 0}, LaurentScalar::v_power(1));
  SymLaurent b = a.substitute_power(3);
  CHECK(b.coeff({3, 0}) == LaurentScalar::v_power(3));
  CHECK(b.coeff({1, 0}).is_zero());

  // Multiplicativity of the substitution.
  SymLaurent p = schur(2, {1, 0}), q = schur(2, {2, 0});
  CHECK((p * q).substitute_power(2) == p.substitute_power(2) * q.substitute_power(2));
}

TEST_CASE("schur expansion recovers schur coefficients") {
  SymLaurent f = schur(3, {2, 1, 0}) * LaurentScalar::v_power(2) + schur(3, {1, 1, 1});
  auto expansion = expand_in_basis(f, SymBasis::schur);
  CHECK(expansion.size() == 2);
  REQUIRE(expansion.count(Coweight{2, 1, 0}) == 1);
  CHECK(expansion.at(Coweight{2, 1, 0}) == LaurentScalar::v_power(2));
  CHECK(expansion.at(Coweight{1, 1, 1}) == LaurentScalar(1));
}
