#pragma once

#include "hecke/parahoric.hpp"

namespace hecke {

// Field context of a Hecke element: the residue field has q^r elements, q the
// residue size of the ground field. r = 1 is the ground field itself.
struct FieldTag {
  long q = 2;
  int r = 1;
  bool operator==(const FieldTag&) const = default;
  std::string str() const;
};

struct TaggedSpherical {
  FieldTag tag;
  SphericalHeckeElement elem;
};

struct TaggedParahoric {
  FieldTag tag;
  ParahoricHeckeElement elem;
};

// Base change along the unramified subextension of degree ext: the input's
// context must be divisible by ext, the output context is tag.r / ext. On
// Satake transforms this is x_i -> x_i^ext together with v -> v^ext on
// coefficients.
TaggedSpherical bc_spherical(const TaggedSpherical& psi, int ext);

// Central elements of a parahoric level: the unique central element whose
// spherical image is the base change of the input's spherical image. The
// compatibility square (image of result) = bc(image of input) is checked on
// every call.
TaggedParahoric bc_central_parahoric(const TaggedParahoric& psi, int ext);

}  // namespace hecke
