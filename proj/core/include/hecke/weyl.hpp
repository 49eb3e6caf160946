#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/coweight.hpp"

namespace hecke {

// Permutation of {0..n-1}; p[i] is the image of i.
struct Permutation {
  std::vector<int> p;

  Permutation() = default;
  explicit Permutation(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(p.size()); }
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return p < o.p; }

  Permutation operator*(const Permutation& o) const;  // (this*o)(i)=this(o(i))
  Permutation inverse() const;
  // (w . m)_{w(i)} = m_i
  Coweight act(const Coweight& m) const;
  int finite_length() const;  // inversion count
};

// Element t_m * w of the extended affine Weyl group Z^n x| S_n of GL_n.
// Product: (t_a u)(t_b v) = t_{a + u.b} (u v).
struct AffineWeylElement {
  Coweight t;
  Permutation w;

  AffineWeylElement() = default;
  AffineWeylElement(Coweight tt, Permutation ww)
      : t(std::move(tt)), w(std::move(ww)) {}
  static AffineWeylElement identity(int n);
  static AffineWeylElement translation(const Coweight& m);
  static AffineWeylElement from_permutation(const Permutation& w);
  // Simple reflections: i in 1..n-1 finite, i = 0 the affine one.
  static AffineWeylElement simple(int n, int i);
  // Length-zero generator of Omega = Z: t_{e_1} * (i -> i+1 cyclic).
  static AffineWeylElement omega(int n);
  static AffineWeylElement omega_power(int n, int k);

  int rank() const { return static_cast<int>(t.size()); }
  bool operator==(const AffineWeylElement&) const = default;
  bool operator<(const AffineWeylElement& o) const;

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;

  // Iwahori-Matsumoto length.
  int length() const;
  // Omega-component: total(t); the element factors as omega^m * affine part.
  int omega_exponent() const { return total(t); }
  AffineWeylElement affine_part() const;  // omega^{-m} * this
  // Reduced word of the affine part in simple reflections (indices 0..n-1);
  // this = omega^m * prod s_i.
  std::vector<int> reduced_word() const;

  // Dominant sort of the translation part: the K-double-coset invariant.
  Coweight spherical_image() const { return dominant_sort(t); }

  std::string str() const;  // "t[a,b,..]*w[images 1-indexed]"
  static AffineWeylElement parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const AffineWeylElement& x);

// Bruhat order on the extended group (equal Omega-components required).
bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y);

// Standard parahoric between I and K: a composition of n naming the block
// sizes of the finite Weyl subgroup W_J.
struct ParahoricShape {
  std::vector<int> blocks;

  explicit ParahoricShape(std::vector<int> b);
  static ParahoricShape iwahori(int n);
  static ParahoricShape maximal(int n);  // single block: J = K

  int rank() const;
  bool is_iwahori() const { return static_cast<int>(blocks.size()) == rank(); }
  bool is_maximal() const { return blocks.size() == 1; }
  bool operator==(const ParahoricShape&) const = default;

  // Finite simple reflection indices generating W_J (subset of 1..n-1).
  std::vector<int> finite_generators() const;
  // All elements of W_J (as permutations); |W_J| = prod blocks!.
  std::vector<Permutation> finite_weyl_elements() const;
  std::string str() const;
};

// Unique minimal-length representative of W_J x W_J.
AffineWeylElement min_double_coset_rep(const AffineWeylElement& x,
                                       const ParahoricShape& J);

// Representatives (minimal-length) of all W_J-double cosets whose spherical
// image is dominance-<= bound.
std::vector<AffineWeylElement> double_coset_reps(const ParahoricShape& J,
                                                 const Coweight& bound);

// All dominant mu with mu <= bound in dominance order (equal totals).
std::vector<Coweight> dominant_below(const Coweight& bound);

// Closure order on double cosets via their minimal representatives.
bool coset_leq(const AffineWeylElement& xmin, const AffineWeylElement& ymin);

}  // namespace hecke
