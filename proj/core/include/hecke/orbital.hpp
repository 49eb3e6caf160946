#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/basechange.hpp"
#include "hecke/bigint.hpp"
#include "hecke/centralizer.hpp"
#include "hecke/parahoric.hpp"

namespace hecke {

// Exact value num/den with both parts in Z[v, v^-1]; den is nonzero.  The
// enumeration at a fixed residue size only defines the value at that size,
// so equality is decided after substituting v^2 = q.
struct RatioValue {
  LaurentScalar num = LaurentScalar(0);
  LaurentScalar den = LaurentScalar(1);

  RatioValue plus(const RatioValue& o) const;
  RatioValue times(const RatioValue& o) const;
  bool equals_specialized(const RatioValue& o, long q) const;
  std::string str() const;
};

// Completeness record for one orbit enumeration.  frontier_clean means every
// discovered-but-not-expanded class evaluated to zero; a value without
// frontier_clean must not be compared against anything.
struct EnumerationCertificate {
  int precision = 0;
  int radius = 0;
  long classes_expanded = 0;
  long frontier_discarded = 0;
  bool frontier_clean = true;
  long support_classes = 0;
  long orbit_count = 0;
  long route_checks = 0;  // pair positions recomputed through the chain route
  std::vector<std::string> stabilizer_volumes;

  bool certified() const { return frontier_clean; }
};

struct OrbitalValue {
  RatioValue value;
  EnumerationCertificate certificate;
};

// Witness that a monic polynomial over F_{q^r}((t)) is irreducible, so that
// its root generates a field and centralizer orbits have finite volume.
struct EllipticityCertificate {
  enum class Kind { residue_irreducible, shifted_eisenstein, odd_discriminant };
  Kind kind = Kind::residue_irreducible;
  int shift = 0;  // t-power substitution used by the Eisenstein test
  std::string str() const;
};

// Tries, in order: irreducibility of the residue polynomial, the Eisenstein
// criterion after X -> t^s X for s = 0..6, and (odd residue size, degree 2)
// odd valuation of the discriminant.  nullopt means "not certified", never
// "reducible".
std::optional<EllipticityCertificate> certify_elliptic(
    const std::vector<SeriesScalar>& low_coeffs);

// Integral of f over the conjugacy class of gamma, with vol(K) = 1 on the
// group and the unit-group volume of the reference coefficient order set to 1
// on the centralizer.  gamma must be regular semisimple separable with
// certified irreducible characteristic polynomial; anything else is refused.
// extra_margin widens the enumeration radius beyond the default safety
// margin; the certified value must not depend on it.
OrbitalValue orbital_integral(const LocalMatrix& gamma, const ParahoricHeckeElement& f,
                              int extra_margin = 0);

// Twisted analogue over E = F_{q^r}((t)): integrates g -> phi(g^-1 delta
// sigma(g)) over classes of the twisted centralizer, which is the unit group
// of the field generated by the norm Nm(delta) = delta sigma(delta) ...
// sigma^{r-1}(delta).  Values are returned in the ground house: the count
// variable of E enters as v^r.
OrbitalValue twisted_orbital_integral(const LocalMatrix& delta,
                                      const ParahoricHeckeElement& phi, int r,
                                      int extra_margin = 0);

// Exact trace identity on the r-fold tensor power: the trace of the
// composite operator (T_1 x ... x T_r) after the cyclic factor shift equals
// the trace of the product T_1 T_2 ... T_r.  The left side is built as an
// explicit d^r by d^r matrix over the rationals.
bool saito_shintani_check(const std::vector<std::vector<std::vector<Rational>>>& factors);

// One matched pair of integrals: the twisted integral of psi against delta
// and the plain integral of its base-change image against the companion
// matrix of the norm's characteristic polynomial.
struct FLReport {
  int n = 0;
  long q = 0;
  int r = 0;
  ParahoricShape level{std::vector<int>{1}};
  std::string delta;
  std::vector<std::pair<Coweight, LaurentScalar>> psi_coeffs;
  std::string norm_charpoly;
  std::string ellipticity;
  RatioValue twisted;
  RatioValue plain;
  bool equal = false;
  bool inconclusive = false;  // set when either certificate is incomplete
  EnumerationCertificate twisted_certificate;
  EnumerationCertificate plain_certificate;
};

// Builds psi = sum of coeffs[mu] . (central element for the Schur function
// s_mu at level J over E), evaluates both sides, and compares them at the
// residue size of the ground field.
FLReport verify_fl(const LocalMatrix& delta,
                   const std::vector<std::pair<Coweight, LaurentScalar>>& coeffs,
                   const ParahoricShape& J, int r);

// Deterministic 64-bit stream; fixed constants, identical output on every
// platform for a given seed.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  long below(long n);  // uniform-ish in [0, n), n >= 1
 private:
  std::uint64_t state_;
};

// Seeded search for an integral delta in GL_n(O_E) with unit determinant
// whose norm has a certified irreducible characteristic polynomial.  Throws
// uncertified_error when the attempt budget runs out.
LocalMatrix sample_delta(const LocalField& E, int n, std::uint64_t seed);

// Independent n = 2 evaluation of the unit integral: breadth-first search
// over single lattice classes with fixed-point test by elementary-divisor
// position, stabilizer volumes by brute-force unit counting in a finite
// quotient.  Shares neither the chain walk nor the unit-index formula with
// orbital_integral.
RatioValue tree_orbital_unit_gl2(const LocalMatrix& gamma);

}  // namespace hecke
