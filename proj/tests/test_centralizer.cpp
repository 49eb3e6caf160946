#include "doctest.h"

#include <vector>

#include "hecke/centralizer.hpp"
#include "hecke/orbital.hpp"

using namespace hecke;

namespace {

std::vector<SeriesScalar> poly(const LocalField& F,
                               const std::vector<std::vector<long>>& coeffs) {
  std::vector<SeriesScalar> out;
  for (const auto& c : coeffs) out.push_back(SeriesScalar::from_poly(F, 0, c));
  return out;
}

}  // namespace

TEST_CASE("unramified quadratic algebra") {
  LocalField F(2, 1, 20);
  // X^2 + X + (1 + t): residue X^2 + X + 1 is irreducible over F_2.
  CentralizerAlgebra A(F, poly(F, {{1, 1}, {1}}));
  CHECK(A.degree() == 2);
  CHECK(A.residue_degree() == 2);
  CHECK(A.ramification_index() == 1);
  CHECK(A.maximal_order() == A.reference_order());
  auto [num, den] = A.unit_volume(A.reference_order());
  CHECK(num == den);
}

TEST_CASE("ramified quadratic algebra") {
  LocalField F(2, 1, 20);
  // X^2 + t is Eisenstein: totally ramified.
  CentralizerAlgebra A(F, poly(F, {{0, 1}, {0}}));
  CHECK(A.residue_degree() == 1);
  CHECK(A.ramification_index() == 2);
  CHECK(A.maximal_order() == A.reference_order());
  // The maximal ideal strictly contains t times the order.
  CHECK(A.maximal_order().contains(A.maximal_ideal()));
  CHECK(A.maximal_ideal().contains(A.maximal_order().scaled_t(1)));
  CHECK(A.maximal_ideal() != A.maximal_order().scaled_t(1));
}

TEST_CASE("totally ramified cubic") {
  LocalField F(2, 1, 24);
  // X^3 + t: e = 3, f = 1.
  CentralizerAlgebra A(F, poly(F, {{0, 1}, {0}, {0}}));
  CHECK(A.residue_degree() == 1);
  CHECK(A.ramification_index() == 3);
}

TEST_CASE("non-maximal reference order") {
  LocalField F(3, 1, 20);
  // X^2 - 2 t^2: the root is t sqrt(2), so O_F[X] has conductor t inside the
  // maximal order O_F[X/t].
  CentralizerAlgebra A(F, poly(F, {{0, 0, 1}, {0}}));
  CHECK(A.residue_degree() == 2);
  CHECK(A.maximal_order() != A.reference_order());
  CHECK(A.maximal_order().contains(A.reference_order()));
  // [O^x : R^x] = q + 1 for the conductor-t order in the unramified
  // quadratic extension.
  auto [num, den] = A.unit_volume(A.maximal_order());
  CHECK(num * (q_power(1) - LaurentScalar(1)) == den * (q_power(2) - LaurentScalar(1)));
}

TEST_CASE("norm valuations through the multiplication matrix") {
  LocalField F(2, 1, 20);
  CentralizerAlgebra A(F, poly(F, {{1, 1}, {1}}));
  // Nm(x) for the generator x: val det(mult by x) = val(c_0) = 0.
  std::vector<SeriesScalar> x = {SeriesScalar::zero(F), SeriesScalar::one(F)};
  CHECK(A.norm_valuation(x) == 0);
  // Nm(t x) has valuation n = 2.
  std::vector<SeriesScalar> tx = {SeriesScalar::zero(F), SeriesScalar::t_power(F, 1)};
  CHECK(A.norm_valuation(tx) == 2);
  CHECK(A.min_norm_valuation(A.maximal_order()) == 0);
  CHECK(A.min_norm_valuation(A.maximal_order().scaled_t(1)) == 2);

  // Ramified: the uniformizer has norm valuation f = 1.
  CentralizerAlgebra B(F, poly(F, {{0, 1}, {0}}));
  CHECK(B.min_norm_valuation(B.maximal_ideal()) == 1);
}

TEST_CASE("multiplication matrices represent the algebra") {
  LocalField F(3, 1, 16);
  CentralizerAlgebra A(F, poly(F, {{1, 1}, {2}, {0}}));
  SplitMix rng(59);
  auto random_elt = [&] {
    std::vector<SeriesScalar> c;
    for (int i = 0; i < 3; ++i)
      c.push_back(SeriesScalar::from_poly(F, 0, {rng.below(3), rng.below(3)}));
    return c;
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_elt(), b = random_elt();
    LocalMatrix ma = A.mult_matrix(a), mb = A.mult_matrix(b);
    CHECK((ma * mb).matches(mb * ma));
    // mult(a) applied to the coordinates of b equals mult(b) applied to a.
    LocalMatrix diff = ma * mb - mb * ma;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(!diff.at(i, j).known_nonzero());
  }
  // The companion matrix satisfies its own polynomial.
  auto cp = A.companion().charpoly();
  for (size_t i = 0; i < cp.size() - 1; ++i)
    CHECK(same_series(cp[i], A.charpoly()[i]));
}

TEST_CASE("integrality lattices solve transporter conditions") {
  LocalField F(2, 1, 20);
  CentralizerAlgebra A(F, poly(F, {{1, 1}, {1}}));
  // Conditions from the regular representation on the standard lattice: the
  // coefficient lattice is exactly the reference order.
  std::vector<LocalMatrix> images = {LocalMatrix::identity(F, 2), A.companion()};
  Lattice got = A.coefficient_integrality_lattice({images});
  CHECK(got == A.reference_order());
}

TEST_CASE("orders are validated") {
  LocalField F(2, 1, 20);
  CentralizerAlgebra A(F, poly(F, {{1, 1}, {1}}));
  // A lattice that is not closed under multiplication is rejected.
  CHECK_THROWS_AS(A.unit_volume(A.maximal_order().scaled_t(1)), input_error);
}
