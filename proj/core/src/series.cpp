#include "hecke/series.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

long pow_long(long base, int e) {
  long out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

int clamp_cap(long cap) {
  return cap >= SeriesScalar::kExactCap ? SeriesScalar::kExactCap
                                        : static_cast<int>(cap);
}

}  // namespace

LocalField::LocalField(long q_, int r_, int prec_) : q(q_), r(r_), prec(prec_) {
  if (q < 2) throw input_error("residue size must be at least 2");
  if (r < 1) throw input_error("extension degree must be at least 1");
  if (prec < 1) throw input_error("working precision must be positive");
  k = gf_table(pow_long(q, r));
}

void SeriesScalar::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    lo_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (!c_.empty() && lo_ + static_cast<int>(c_.size()) > cap_)
    c_.resize(cap_ - lo_ > 0 ? static_cast<size_t>(cap_ - lo_) : 0);
  size_t lead2 = 0;
  while (lead2 < c_.size() && c_[lead2] == 0) ++lead2;
  if (lead2 == c_.size()) c_.clear();
  if (c_.empty()) lo_ = 0;
}

SeriesScalar SeriesScalar::zero(const LocalField& F) {
  return SeriesScalar(F, 0, {}, kExactCap);
}

SeriesScalar SeriesScalar::zero_to(const LocalField& F, int cap) {
  return SeriesScalar(F, 0, {}, cap);
}

SeriesScalar SeriesScalar::from_int(const LocalField& F, long c) {
  return monomial(F, F.k->from_int(c), 0);
}

SeriesScalar SeriesScalar::monomial(const LocalField& F, long coeff_index, int exponent) {
  if (coeff_index < 0 || coeff_index >= F.k->size())
    throw input_error("coefficient index out of field range");
  return SeriesScalar(F, exponent, {coeff_index}, kExactCap);
}

SeriesScalar SeriesScalar::t_power(const LocalField& F, int exponent) {
  return monomial(F, 1, exponent);
}

SeriesScalar SeriesScalar::one(const LocalField& F) { return t_power(F, 0); }

SeriesScalar SeriesScalar::from_poly(const LocalField& F, int val, std::vector<long> coeffs) {
  for (long c : coeffs)
    if (c < 0 || c >= F.k->size()) throw input_error("coefficient index out of field range");
  return SeriesScalar(F, val, std::move(coeffs), kExactCap);
}

int SeriesScalar::valuation() const {
  if (!c_.empty()) return lo_;
  if (exact()) throw input_error("valuation of the zero series");
  throw precision_error("valuation undecidable: zero to precision " + std::to_string(cap_));
}

long SeriesScalar::coeff(int exponent) const {
  if (exponent >= cap_)
    throw precision_error("coefficient at t^" + std::to_string(exponent) +
                          " beyond precision cap " + std::to_string(cap_));
  if (c_.empty() || exponent < lo_ || exponent >= lo_ + static_cast<int>(c_.size())) return 0;
  return c_[exponent - lo_];
}

int SeriesScalar::top_exponent() const {
  if (c_.empty()) throw input_error("top exponent of a zero series");
  return lo_ + static_cast<int>(c_.size()) - 1;
}

SeriesScalar SeriesScalar::operator+(const SeriesScalar& o) const {
  if (!F_.same_field(o.F_)) throw input_error("series field mismatch");
  const int cap = std::min(cap_, o.cap_);
  if (c_.empty() && o.c_.empty()) return SeriesScalar(F_, 0, {}, cap);
  int lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  int hi = lo;  // one past the last stored exponent
  if (!c_.empty()) hi = std::max(hi, lo_ + static_cast<int>(c_.size()));
  if (!o.c_.empty()) hi = std::max(hi, o.lo_ + static_cast<int>(o.c_.size()));
  hi = std::min(hi, cap);
  if (hi <= lo) return SeriesScalar(F_, 0, {}, cap);
  std::vector<long> out(static_cast<size_t>(hi - lo), 0);
  for (int e = lo; e < hi; ++e) {
    long a = (!c_.empty() && e >= lo_ && e < lo_ + static_cast<int>(c_.size())) ? c_[e - lo_] : 0;
    long b = (!o.c_.empty() && e >= o.lo_ && e < o.lo_ + static_cast<int>(o.c_.size()))
                 ? o.c_[e - o.lo_]
                 : 0;
    out[e - lo] = F_.k->add(a, b);
  }
  return SeriesScalar(F_, lo, std::move(out), cap);
}

SeriesScalar SeriesScalar::operator-() const {
  std::vector<long> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = F_.k->neg(c_[i]);
  return SeriesScalar(F_, lo_, std::move(out), cap_);
}

SeriesScalar SeriesScalar::operator-(const SeriesScalar& o) const { return *this + (-o); }

SeriesScalar SeriesScalar::operator*(const SeriesScalar& o) const {
  if (!F_.same_field(o.F_)) throw input_error("series field mismatch");
  // Error terms: t^cap * t^(o.val) and symmetrically; an exact factor
  // contributes no error term of its own.
  const long aval = c_.empty() ? cap_ : lo_;
  const long bval = o.c_.empty() ? o.cap_ : o.lo_;
  long capl = kExactCap;
  if (!exact()) capl = std::min(capl, static_cast<long>(cap_) + bval);
  if (!o.exact()) capl = std::min(capl, static_cast<long>(o.cap_) + aval);
  const int cap = clamp_cap(capl);
  if (c_.empty() || o.c_.empty()) return SeriesScalar(F_, 0, {}, cap);
  const int lo = lo_ + o.lo_;
  const int len =
      std::min<long>(static_cast<long>(c_.size() + o.c_.size()) - 1, static_cast<long>(cap) - lo);
  if (len <= 0) return SeriesScalar(F_, 0, {}, cap);
  std::vector<long> out(static_cast<size_t>(len), 0);
  for (size_t i = 0; i < c_.size() && static_cast<int>(i) < len; ++i) {
    if (c_[i] == 0) continue;
    const size_t jmax = std::min(o.c_.size(), static_cast<size_t>(len) - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] = F_.k->add(out[i + j], F_.k->mul(c_[i], o.c_[j]));
    }
  }
  return SeriesScalar(F_, lo, std::move(out), cap);
}

SeriesScalar SeriesScalar::inverse() const {
  if (c_.empty()) {
    if (exact()) throw input_error("inverse of the zero series");
    throw precision_error("cannot invert: zero to precision " + std::to_string(cap_));
  }
  const int rel = exact() ? F_.prec : cap_ - lo_;
  std::vector<long> u(static_cast<size_t>(rel), 0);
  for (size_t i = 0; i < u.size() && i < c_.size(); ++i) u[i] = c_[i];
  const long inv0 = F_.k->inv(u[0]);
  std::vector<long> w(static_cast<size_t>(rel), 0);
  w[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    long acc = 0;
    for (int i = 1; i <= k; ++i) acc = F_.k->add(acc, F_.k->mul(u[i], w[k - i]));
    w[k] = F_.k->mul(F_.k->neg(acc), inv0);
  }
  const int cap = exact() ? clamp_cap(static_cast<long>(-lo_) + rel) : cap_ - 2 * lo_;
  return SeriesScalar(F_, -lo_, std::move(w), cap);
}

SeriesScalar SeriesScalar::shifted(int dexp) const {
  const int cap = exact() ? kExactCap : clamp_cap(static_cast<long>(cap_) + dexp);
  return SeriesScalar(F_, lo_ + dexp, c_, cap);
}

SeriesScalar SeriesScalar::frobenius() const {
  std::vector<long> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = F_.k->pow(c_[i], F_.q);
  return SeriesScalar(F_, lo_, std::move(out), cap_);
}

SeriesScalar SeriesScalar::frobenius_power(int k) const {
  SeriesScalar x = *this;
  int steps = ((k % F_.r) + F_.r) % F_.r;
  for (int i = 0; i < steps; ++i) x = x.frobenius();
  return x;
}

SeriesScalar SeriesScalar::truncated(int new_cap) const {
  return SeriesScalar(F_, lo_, c_, std::min(cap_, new_cap));
}

SeriesScalar SeriesScalar::polynomial_below(int m) const {
  if (cap_ < m)
    throw precision_error("polynomial part below t^" + std::to_string(m) +
                          " needs precision " + std::to_string(m) + ", have " +
                          std::to_string(cap_));
  if (c_.empty() || lo_ >= m) return zero(F_);
  std::vector<long> out(c_.begin(),
                        c_.begin() + std::min<long>(c_.size(), static_cast<long>(m) - lo_));
  return SeriesScalar(F_, lo_, std::move(out), kExactCap);
}

bool SeriesScalar::matches(const SeriesScalar& o) const {
  return (*this - o).is_zero();
}

bool SeriesScalar::over_base() const {
  for (long c : c_)
    if (F_.k->pow(c, F_.q) != c) return false;
  return true;
}

std::string SeriesScalar::str() const {
  std::ostringstream os;
  if (c_.empty()) {
    os << "0";
  } else {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (os.tellp() > 0) os << " + ";
      const int e = lo_ + static_cast<int>(i);
      os << "[" << c_[i] << "]";
      if (e != 0) os << "t^" << e;
    }
  }
  if (!exact()) os << " + O(t^" << cap_ << ")";
  return os.str();
}

bool same_series(const SeriesScalar& a, const SeriesScalar& b) { return a.matches(b); }

SeriesScalar embed_series(const SeriesScalar& x, const LocalField& E) {
  const LocalField& F = x.field();
  if (F.residue_size() == E.residue_size()) return x;
  GFEmbedding emb(F.k, E.k);
  if (x.is_zero()) return x.exact() ? SeriesScalar::zero(E) : SeriesScalar::zero_to(E, x.cap());
  SeriesScalar out = x.exact() ? SeriesScalar::zero(E) : SeriesScalar::zero_to(E, x.cap());
  const int hi = std::min(x.cap(), x.top_exponent() + 1);
  for (int e = x.valuation(); e < hi; ++e) {
    const long c = x.coeff(e);
    if (c) out = out + SeriesScalar::monomial(E, emb.embed(c), e);
  }
  return out;
}

SeriesScalar project_series(const SeriesScalar& x, const LocalField& F) {
  const LocalField& E = x.field();
  if (E.residue_size() == F.residue_size()) return x;
  GFEmbedding emb(F.k, E.k);
  SeriesScalar out = x.exact() ? SeriesScalar::zero(F) : SeriesScalar::zero_to(F, x.cap());
  if (x.is_zero()) return out;
  const int hi = std::min(x.cap(), x.top_exponent() + 1);
  for (int e = x.valuation(); e < hi; ++e) {
    const long c = x.coeff(e);
    if (c) out = out + SeriesScalar::monomial(F, emb.project(c), e);
  }
  return out;
}

}  // namespace hecke
