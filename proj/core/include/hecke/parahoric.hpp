#pragma once

#include <map>
#include <string>

#include "hecke/chain.hpp"
#include "hecke/spherical.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Element of the Iwahori Hecke algebra in the T-basis, normalized with
// vol(I) = 1 so that T-coefficients are function values on I-double cosets.
class IwahoriHeckeElement {
 public:
  explicit IwahoriHeckeElement(int rank) : rank_(rank) {}
  static IwahoriHeckeElement unit(int rank);
  static IwahoriHeckeElement basis(const AffineWeylElement& w);

  int rank() const { return rank_; }
  const std::map<AffineWeylElement, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const AffineWeylElement& w) const;
  void add_term(const AffineWeylElement& w, const LaurentScalar& c);
  bool is_zero() const { return terms_.empty(); }

  IwahoriHeckeElement operator+(const IwahoriHeckeElement& o) const;
  IwahoriHeckeElement operator-(const IwahoriHeckeElement& o) const;
  IwahoriHeckeElement scaled(const LaurentScalar& c) const;
  IwahoriHeckeElement operator*(const IwahoriHeckeElement& o) const;
  bool operator==(const IwahoriHeckeElement& o) const;
  std::string str() const;

 private:
  int rank_;
  std::map<AffineWeylElement, LaurentScalar> terms_;
};

// T-basis inverse of a single basis element.
IwahoriHeckeElement basis_inverse(const AffineWeylElement& w);

// Bernstein element theta_lambda, any lambda in Z^n: for lambda = a - b with
// a, b dominant, theta = v^{len(t_b) - len(t_a)} T_{t_a} T_{t_b}^{-1};
// independent of the decomposition.
IwahoriHeckeElement theta(const Coweight& lambda);

// z_mu = sum of theta over the W-orbit of mu: a central element.
IwahoriHeckeElement bernstein_z(const Coweight& mu);

// J-bi-invariant element stored by function values on minimal-length
// double-coset representatives; vol(J) = 1 normalization.
class ParahoricHeckeElement {
 public:
  explicit ParahoricHeckeElement(ParahoricShape J) : J_(std::move(J)) {}
  static ParahoricHeckeElement unit(const ParahoricShape& J);

  const ParahoricShape& level() const { return J_; }
  int rank() const { return J_.rank(); }
  const std::map<AffineWeylElement, LaurentScalar>& values() const { return values_; }
  LaurentScalar value(const AffineWeylElement& w) const;  // any class member
  void add_value(const AffineWeylElement& min_rep, const LaurentScalar& c);
  bool is_zero() const { return values_.empty(); }

  ParahoricHeckeElement operator+(const ParahoricHeckeElement& o) const;
  ParahoricHeckeElement operator-(const ParahoricHeckeElement& o) const;
  ParahoricHeckeElement scaled(const LaurentScalar& c) const;
  bool operator==(const ParahoricHeckeElement& o) const;

  IwahoriHeckeElement to_iwahori() const;
  std::string str() const;

 private:
  ParahoricShape J_;
  std::map<AffineWeylElement, LaurentScalar> values_;
};

// Inverse of to_iwahori: requires the T-coefficients to be constant on
// W_J-double cosets.
ParahoricHeckeElement parahoric_from_iwahori(const IwahoriHeckeElement& h,
                                             const ParahoricShape& J);

// Convolution at level J: vol(J) = 1 makes this (a * b) / P_{W_J}(q) in the
// Iwahori realization; the division is exact and checked.
ParahoricHeckeElement convolve_parahoric(const ParahoricHeckeElement& a,
                                         const ParahoricHeckeElement& b);

// Commutation with the simple-coset indicators and the length-zero units,
// which generate the level-J algebra.
bool is_central(const ParahoricHeckeElement& h);

// Spherical <-> Iwahori transport (K-bi-invariant function values).
IwahoriHeckeElement spherical_to_iwahori(const SphericalHeckeElement& f);
SphericalHeckeElement spherical_from_iwahori(const IwahoriHeckeElement& h);

// The same function values, repackaged at the one-block level.
ParahoricHeckeElement spherical_as_parahoric(const SphericalHeckeElement& f);

// h *_J indicator(K), landing in the spherical algebra.
SphericalHeckeElement bernstein_image(const ParahoricHeckeElement& h);

// The central element of the level-J algebra whose Bernstein image has
// Satake transform P: expand P in monomial symmetric functions, take the
// matching combination of z_mu, multiply by the J-indicator. Centrality and
// the Bernstein compatibility are asserted on every call.
ParahoricHeckeElement central_element_for(const SymLaurent& P, const ParahoricShape& J);

// Function value of h at the class of g, via chain_relative_position
// against the standard chain of shape J.
LaurentScalar evaluate_at(const ParahoricHeckeElement& h, const LocalMatrix& g);

// vol(J) under the spherical normalization vol(K) = 1, as the exact pair
// (P_{W_J}(q), P_{S_n}(q)).
std::pair<LaurentScalar, LaurentScalar> parahoric_volume(const ParahoricShape& J);

}  // namespace hecke
