#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hecke {

// F_{p^d} = F_p[X]/(f) with a fixed table of defining polynomials.
// Elements are indices in [0, p^d): base-p digits are the coefficients of the
// polynomial-basis expansion, least significant digit = constant term.
class GFTable {
 public:
  explicit GFTable(long size);

  long size() const { return size_; }
  int characteristic() const { return p_; }
  int degree() const { return d_; }
  // Defining polynomial coefficients, constant term first, length degree+1.
  const std::vector<int>& modulus() const { return poly_; }
  std::string modulus_str() const;

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long e) const;
  long from_int(long c) const;  // image of an integer in the prime field
  long generator() const { return gen_; }

 private:
  long p_ = 0;
  int d_ = 0;
  long size_ = 0;
  std::vector<int> poly_;
  long gen_ = 0;
  std::vector<long> exp_;  // exp_[k] = gen^k, length 2*(size-1)
  std::vector<long> log_;  // log_[a] for a != 0
  long mul_raw(long a, long b) const;
};

// Shared immutable handle; equality is by field size.
using GFPtr = std::shared_ptr<const GFTable>;
GFPtr gf_table(long size);

// The embedding F_sub -> F_big determined by the smallest-index root of the
// subfield's defining polynomial. Requires [big : sub] integral.
class GFEmbedding {
 public:
  GFEmbedding(GFPtr sub, GFPtr big);

  const GFPtr& sub() const { return sub_; }
  const GFPtr& big() const { return big_; }
  long embed(long a) const;
  // Preimage of a big-field element; input must lie in the image.
  long project(long a) const;
  bool in_image(long a) const;

 private:
  GFPtr sub_;
  GFPtr big_;
  std::vector<long> fwd_;
  std::vector<long> back_;  // size big, -1 where not in image
};

}  // namespace hecke
