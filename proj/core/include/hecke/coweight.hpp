#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

// A cocharacter of the diagonal torus of GL_n: an integer vector of length n.
// Dominant means weakly decreasing.
using Coweight = std::vector<int>;

inline bool is_dominant(const Coweight& m) {
  return std::is_sorted(m.rbegin(), m.rend());
}

inline Coweight dominant_sort(Coweight m) {
  std::sort(m.begin(), m.end(), std::greater<int>());
  return m;
}

inline int total(const Coweight& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Partial-sum dominance order; only comparable with equal rank and total.
inline bool dominance_leq(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw input_error("dominance_leq: rank mismatch");
  if (!is_dominant(a) || !is_dominant(b))
    throw input_error("dominance_leq: arguments must be dominant");
  if (total(a) != total(b)) return false;
  int pa = 0, pb = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

// max(|positive part|, |negative part|)
inline int norm_pm(const Coweight& m) {
  int pos = 0, neg = 0;
  for (int x : m) (x >= 0 ? pos : neg) += std::abs(x);
  return std::max(pos, neg);
}

inline int abs_sum(const Coweight& m) {
  int s = 0;
  for (int x : m) s += std::abs(x);
  return s;
}

// <2 rho, m> = sum_i (n + 1 - 2 i) m_i with rows indexed from 1.
inline int two_rho_pairing(const Coweight& m) {
  int n = static_cast<int>(m.size());
  int s = 0;
  for (int i = 0; i < n; ++i) s += (n - 1 - 2 * i) * m[i];
  return s;
}

inline Coweight operator+(Coweight a, const Coweight& b) {
  if (a.size() != b.size()) throw input_error("coweight add: rank mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Coweight operator-(Coweight a) {
  for (auto& x : a) x = -x;
  return a;
}

// -w0 * m for dominant m: negate and reverse, dominant again.
inline Coweight dual_coweight(Coweight m) {
  std::reverse(m.begin(), m.end());
  return -std::move(m);
}

// All distinct permutations of m, in lexicographic order.
inline std::vector<Coweight> coweight_orbit(Coweight m) {
  std::sort(m.begin(), m.end());
  std::vector<Coweight> out;
  do {
    out.push_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

inline std::string coweight_str(const Coweight& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

}  // namespace hecke
