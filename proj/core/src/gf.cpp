#include "hecke/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

struct FixedPoly {
  long size;
  std::vector<int> coeffs;  // constant term first, monic leading 1
};

// Defining polynomials for the field sizes the tool ships with.
const FixedPoly kFixedPolys[] = {
    {4, {1, 1, 1}},        {8, {1, 1, 0, 1}},      {16, {1, 1, 0, 0, 1}},
    {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}},
    {9, {2, 2, 1}},        {27, {1, 2, 0, 1}},     {81, {2, 0, 0, 2, 1}},
    {25, {2, 4, 1}},       {125, {3, 3, 0, 1}},    {49, {3, 6, 1}},
    {121, {2, 7, 1}},      {169, {2, 12, 1}},
};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomial multiplication mod (poly, p), on index-encoded elements.
long poly_mul_mod(long a, long b, long p, int d, const std::vector<int>& poly) {
  std::vector<long> prod(2 * d - 1, 0);
  std::vector<long> da(d), db(d);
  for (int i = 0; i < d; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int k = 2 * d - 2; k >= d; --k) {
    const long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // X^k = -sum_{i<d} poly[i] X^{k-d+i}
    for (int i = 0; i < d; ++i)
      prod[k - d + i] = (prod[k - d + i] + c * (p - poly[i])) % p;
  }
  long out = 0;
  for (int i = d - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

}  // namespace

GFTable::GFTable(long size) : size_(size) {
  if (size < 2) throw input_error("field size must be at least 2");
  long p = 0;
  int d = 0;
  for (long cand = 2; cand <= size; ++cand) {
    if (!is_prime(cand)) continue;
    long pw = cand;
    int deg = 1;
    while (pw < size) {
      pw *= cand;
      ++deg;
    }
    if (pw == size) {
      p = cand;
      d = deg;
      break;
    }
  }
  if (p == 0) throw input_error("field size is not a prime power: " + std::to_string(size));
  p_ = p;
  d_ = d;
  if (d_ == 1) {
    poly_ = {0, 1};  // X - 0 placeholder; arithmetic is plain mod p
  } else {
    for (const FixedPoly& f : kFixedPolys)
      if (f.size == size) poly_.assign(f.coeffs.begin(), f.coeffs.end());
    if (poly_.empty())
      throw input_error("no defining polynomial on file for field size " + std::to_string(size));
  }
  // Discrete-log tables from the smallest-index generator.
  const long order = size_ - 1;
  for (long g = 1; g < size_; ++g) {
    long x = g;
    long steps = 1;
    while (x != 1 && steps <= order) {
      x = mul_raw(x, g);
      ++steps;
    }
    if (x == 1 && steps == order) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw consistency_error("no multiplicative generator found");
  exp_.assign(2 * order, 0);
  log_.assign(size_, 0);
  long x = 1;
  for (long k = 0; k < order; ++k) {
    exp_[k] = x;
    exp_[k + order] = x;
    log_[x] = k;
    x = mul_raw(x, gen_);
  }
}

long GFTable::mul_raw(long a, long b) const {
  if (d_ == 1) return (a * b) % p_;
  return poly_mul_mod(a, b, p_, d_, poly_);
}

long GFTable::add(long a, long b) const {
  if (d_ == 1) return (a + b) % p_;
  long out = 0;
  long base = 1;
  for (int i = 0; i < d_; ++i) {
    out += ((a % p_ + b % p_) % p_) * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return out;
}

long GFTable::neg(long a) const {
  if (d_ == 1) return (p_ - a) % p_;
  long out = 0;
  long base = 1;
  for (int i = 0; i < d_; ++i) {
    out += ((p_ - a % p_) % p_) * base;
    a /= p_;
    base *= p_;
  }
  return out;
}

long GFTable::sub(long a, long b) const { return add(a, neg(b)); }

long GFTable::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

long GFTable::inv(long a) const {
  if (a == 0) throw input_error("inverse of zero field element");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

long GFTable::pow(long a, long e) const {
  if (a == 0) {
    if (e < 0) throw input_error("inverse of zero field element");
    return e == 0 ? 1 : 0;
  }
  const long order = size_ - 1;
  long k = (log_[a] * (e % order)) % order;
  if (k < 0) k += order;
  return exp_[k];
}

long GFTable::from_int(long c) const {
  long r = c % p_;
  return r < 0 ? r + p_ : r;
}

std::string GFTable::modulus_str() const {
  if (d_ == 1) return "X";
  std::ostringstream os;
  for (int i = d_; i >= 0; --i) {
    const int c = i == d_ ? 1 : poly_[i];
    if (c == 0) continue;
    if (os.tellp() > 0) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << (c != 1 ? "*X" : "X");
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

GFPtr gf_table(long size) {
  static std::mutex mu;
  static std::map<long, GFPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  GFPtr t = std::make_shared<GFTable>(size);
  cache[size] = t;
  return t;
}

GFEmbedding::GFEmbedding(GFPtr sub, GFPtr big) : sub_(std::move(sub)), big_(std::move(big)) {
  if (sub_->characteristic() != big_->characteristic())
    throw input_error("subfield embedding needs equal characteristic");
  if (big_->degree() % sub_->degree() != 0)
    throw input_error("field degree does not divide: no embedding");
  // Root of the subfield's defining polynomial inside the big field.
  const long p = sub_->characteristic();
  long root = -1;
  if (sub_->degree() == 1) {
    root = 1;  // prime field embeds via from_int; root of X-1 irrelevant
  } else {
    const std::vector<int>& f = sub_->modulus();
    for (long x = 0; x < big_->size(); ++x) {
      long acc = 0;
      for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        acc = big_->add(big_->mul(acc, x), big_->from_int(f[i]));
      if (acc == 0) {
        root = x;
        break;
      }
    }
    if (root < 0) throw consistency_error("defining polynomial has no root in the big field");
  }
  fwd_.assign(sub_->size(), 0);
  back_.assign(big_->size(), -1);
  for (long a = 0; a < sub_->size(); ++a) {
    long digits = a;
    long img = 0;
    long xp = 1;
    for (int i = 0; i < sub_->degree(); ++i) {
      img = big_->add(img, big_->mul(big_->from_int(digits % p), xp));
      digits /= p;
      xp = big_->mul(xp, root);
    }
    fwd_[a] = img;
    back_[img] = a;
  }
}

long GFEmbedding::embed(long a) const { return fwd_.at(a); }

bool GFEmbedding::in_image(long a) const { return back_.at(a) >= 0; }

long GFEmbedding::project(long a) const {
  const long r = back_.at(a);
  if (r < 0) throw input_error("field element is not in the subfield");
  return r;
}

}  // namespace hecke
