#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/coweight.hpp"
#include "hecke/symlaurent.hpp"

namespace hecke {

// Element of the spherical Hecke algebra of GL_n(F_q((t))): a finite
// combination of the indicator functions f_mu of the double cosets
// K t^mu K, keyed by dominant coweights.
class SphericalHeckeElement {
 public:
  explicit SphericalHeckeElement(int rank) : rank_(rank) {}
  static SphericalHeckeElement unit(int rank);  // f_0, the identity
  static SphericalHeckeElement indicator(const Coweight& mu);

  int rank() const { return rank_; }
  const std::map<Coweight, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const Coweight& mu) const;
  void add_term(const Coweight& mu, const LaurentScalar& c);
  bool is_zero() const { return terms_.empty(); }

  SphericalHeckeElement operator+(const SphericalHeckeElement& o) const;
  SphericalHeckeElement operator-(const SphericalHeckeElement& o) const;
  SphericalHeckeElement scaled(const LaurentScalar& c) const;
  bool operator==(const SphericalHeckeElement& o) const;

  // Largest norm_pm over the support; 0 for the zero element.
  int support_norm() const;
  std::string str() const;

 private:
  int rank_;
  std::map<Coweight, LaurentScalar> terms_;
};

// Kostka-Foulkes polynomial K_{shape,content}(u) as coefficients of u^c,
// computed by the charge statistic over semistandard tableaux.
std::vector<Int> kostka_foulkes(const Coweight& shape, const Coweight& content);

// Hall-Littlewood polynomial P_mu(x; u) with u = v^{-2}, cached per rank.
SymLaurent hall_littlewood(int rank, const Coweight& mu);

// Symbolic Satake transform: satake(f_mu) = v^{<2rho,mu>} P_mu(x; v^{-2}).
SymLaurent satake(const SphericalHeckeElement& f);

// Exact inverse by triangular elimination; rejects P outside the image.
SphericalHeckeElement satake_inverse(const SymLaurent& P);

// psi_mu = satake_inverse(schur(mu)): the basis matching the characters of
// highest-weight representations.
SphericalHeckeElement ic_function(int rank, const Coweight& mu);

SphericalHeckeElement convolve_spherical(const SphericalHeckeElement& f,
                                         const SphericalHeckeElement& g);

// Independent numeric route: unipotent coset enumeration at numeric q.
// Output coefficients are canonical representatives mod v^2 - q (v-exponents
// reduced to {0,1} up to q-powers). The certificate records the enumeration
// window that makes the sum provably complete.
struct BruteforceCertificate {
  long q = 0;
  int entry_valuation_floor = 0;  // entries range over valuations >= this
  long cosets_visited = 0;
};
SymLaurent satake_bruteforce(const SphericalHeckeElement& f, long q,
                             BruteforceCertificate* cert = nullptr, int extra_prec = 0);

// Canonical representative of c in Z[v]/(v^2 - q).
LaurentScalar reduce_mod_q(const LaurentScalar& c, long q);

// Reconstruct a symbolic LaurentScalar from its images mod v^2 - q at several
// prime powers, given that its v-support lies in [lo, hi]. Throws when the
// sample count cannot certify the window.
LaurentScalar lift_from_evaluations(const std::vector<std::pair<long, LaurentScalar>>& samples,
                                    int lo, int hi);

}  // namespace hecke
