#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/lattice.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Periodic chain L_0 > L_1 > ... > L_{k-1} > t L_0 with successive quotient
// dimensions given by the shape's blocks. Stores one lattice per step; the
// whole Z-indexed chain extends by L_{i+k} = t L_i.
class LatticeChain {
 public:
  LatticeChain() = default;
  LatticeChain(ParahoricShape shape, std::vector<Lattice> steps);
  static LatticeChain standard(const LocalField& F, const ParahoricShape& shape);

  const ParahoricShape& shape() const { return shape_; }
  const LocalField& field() const { return steps_[0].field(); }
  int rank() const { return steps_[0].rank(); }
  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<Lattice>& steps() const { return steps_; }
  Lattice step_extended(int i) const;  // any integer index

  LatticeChain apply(const LocalMatrix& g) const;
  LatticeChain scaled_t(int k) const;
  // Homothety-class representative: L_0 determinant valuation in [0, n).
  LatticeChain normalized() const;
  // Canonical complete refinement (one lattice per dimension step).
  LatticeChain refined() const;

  bool operator==(const LatticeChain& o) const;
  std::string str() const;

 private:
  ParahoricShape shape_{std::vector<int>{1}};
  std::vector<Lattice> steps_;
};

// Minimal-length representative of the W~_J double coset attached to the
// pair (C, D): the class of any g with D = g.C, computed from the pairwise
// intersection-dimension profile of the complete refinements.
AffineWeylElement chain_relative_position(const LatticeChain& C, const LatticeChain& D);

// Reduction of an invertible matrix to its monomial Iwahori normal form
// t^lambda P_sigma by valuation-pivot row/column elimination. Independent of
// the chain-profile route; used to cross-check it.
AffineWeylElement monomial_normal_form(const LocalMatrix& g);

// A matrix g with g . standard(shape) = C, columns adapted to the chain.
// Together with monomial_normal_form this gives the second, matrix-side
// route to the pair invariant.
LocalMatrix adapted_basis(const LatticeChain& C);

}  // namespace hecke
