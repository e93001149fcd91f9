#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dynirr/exactalg/poly.hpp"
#include "dynirr/modp/modular.hpp"

namespace dynirr::modp {

/// Polynomial over F_p, residues in [0, p) in ascending order. The modulus is
/// an odd prime below 2^32; primality is the caller's responsibility.
class ModPoly {
 public:
  ModPoly() = default;
  explicit ModPoly(u64 p) : p_(p) {}
  ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
  }

  static ModPoly constant(u64 p, u64 c) { return ModPoly(p, std::vector<u64>{c}); }
  static ModPoly x(u64 p) { return ModPoly(p, std::vector<u64>{0, 1}); }

  u64 modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.back(); }
  std::span<const u64> coeffs() const { return c_; }

  /// Mutable access; entries must stay reduced. Call normalize() afterwards.
  std::vector<u64>& raw() { return c_; }
  void normalize() { trim(); }

  bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  u64 operator()(u64 x) const {
    u64 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
    return acc;
  }

  ModPoly derivative() const {
    std::vector<u64> d(c_.size() > 1 ? c_.size() - 1 : 0);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(d));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  u64 p_ = 0;
  std::vector<u64> c_;
};

inline ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.modulus();
  std::vector<u64> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_mod(a[i], b[i], p);
  return ModPoly(p, std::move(r));
}

inline ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  const u64 p = a.modulus();
  std::vector<u64> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub_mod(a[i], b[i], p);
  return ModPoly(p, std::move(r));
}

inline ModPoly scale(const ModPoly& a, u64 s) {
  std::vector<u64> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : r) c = mul_mod(c, s, a.modulus());
  return ModPoly(a.modulus(), std::move(r));
}

namespace detail {

/// Unreduced product; each entry is a sum of at most min(|a|,|b|) products below 2^64.
inline std::vector<u128> lazy_product(std::span<const u64> a, std::span<const u64> b) {
  std::vector<u128> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const u64 ai = a[i];
    if (ai == 0) continue;
    u128* out = r.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) out[j] += static_cast<u128>(ai * b[j]);
  }
  return r;
}

/// Reduces an unreduced coefficient vector modulo a monic polynomial given by
/// its negated lower coefficients neg[j] = p - m_j. Fills `quot` when non-null.
inline std::vector<u64> lazy_reduce(std::vector<u128> w, std::span<const u64> neg, u64 p,
                                    std::vector<u64>* quot = nullptr) {
  const std::size_t k = neg.size();
  if (quot) quot->assign(w.size() >= k ? w.size() - k : 0, 0);
  for (std::size_t i = w.size(); i-- > k;) {
    const u64 c = static_cast<u64>(w[i] % p);
    w[i] = 0;
    if (quot) (*quot)[i - k] = c;
    if (c == 0) continue;
    u128* out = w.data() + (i - k);
    for (std::size_t j = 0; j < k; ++j) out[j] += static_cast<u128>(c * neg[j]);
  }
  std::vector<u64> r(std::min(w.size(), k));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u64>(w[i] % p);
  return r;
}

}  // namespace detail

inline ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus());
  const u64 p = a.modulus();
  auto w = detail::lazy_product(a.coeffs(), b.coeffs());
  std::vector<u64> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = static_cast<u64>(w[i] % p);
  return ModPoly(p, std::move(r));
}

inline ModPoly make_monic(const ModPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return scale(a, inv_mod(a.leading(), a.modulus()));
}

/// Precomputed reduction modulo a fixed nonzero polynomial m.
class Modulus {
 public:
  explicit Modulus(const ModPoly& m) : p_(m.modulus()), monic_(make_monic(m)) {
    if (m.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "reduction modulo zero polynomial");
    lc_inv_ = inv_mod(m.leading(), p_);
    const auto c = monic_.coeffs();
    neg_.resize(c.size() - 1);
    for (std::size_t j = 0; j + 1 < c.size(); ++j) neg_[j] = c[j] == 0 ? 0 : p_ - c[j];
  }

  u64 modulus() const { return p_; }
  long degree() const { return monic_.degree(); }
  const ModPoly& monic() const { return monic_; }

  ModPoly reduce(const ModPoly& a) const {
    if (a.degree() < degree()) return a;
    std::vector<u128> w(a.coeffs().begin(), a.coeffs().end());
    return ModPoly(p_, detail::lazy_reduce(std::move(w), neg_, p_));
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.is_zero() || b.is_zero()) return ModPoly(p_);
    return ModPoly(p_, detail::lazy_reduce(detail::lazy_product(a.coeffs(), b.coeffs()), neg_, p_));
  }

  /// Quotient and remainder of a by the original (non-monic) modulus polynomial.
  std::pair<ModPoly, ModPoly> divide(const ModPoly& a) const {
    if (a.degree() < degree()) return {ModPoly(p_), a};
    std::vector<u128> w(a.coeffs().begin(), a.coeffs().end());
    std::vector<u64> q;
    auto r = detail::lazy_reduce(std::move(w), neg_, p_, &q);
    return {scale(ModPoly(p_, std::move(q)), lc_inv_), ModPoly(p_, std::move(r))};
  }

  ModPoly pow(ModPoly base, u64 e) const {
    ModPoly r = reduce(ModPoly::constant(p_, 1));
    base = reduce(base);
    while (e) {
      if (e & 1) r = mul(r, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return r;
  }

 private:
  u64 p_;
  ModPoly monic_;
  u64 lc_inv_ = 1;
  std::vector<u64> neg_;
};

inline ModPoly rem(const ModPoly& a, const ModPoly& m) { return Modulus(m).reduce(a); }

/// Monic gcd; gcd(0, 0) = 0.
inline ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Res(A, B) = lc(A)^deg B * prod_{A(a)=0} B(a) in F_p, by the Euclidean scheme
/// Res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) Res(B, R), R = A mod B.
inline u64 resultant(ModPoly A, ModPoly B) {
  const u64 p = A.modulus();
  if (A.is_zero() || B.is_zero()) return 0;
  u64 acc = 1;
  while (true) {
    const long da = A.degree();
    const long db = B.degree();
    if (da == 0) return mul_mod(acc, pow_mod(A.leading(), static_cast<u64>(db), p), p);
    if (db == 0) return mul_mod(acc, pow_mod(B.leading(), static_cast<u64>(da), p), p);
    ModPoly R = rem(A, B);
    if (R.is_zero()) return 0;
    if ((da & 1) && (db & 1)) acc = p - acc;
    acc = mul_mod(acc, pow_mod(B.leading(), static_cast<u64>(da - R.degree()), p), p);
    A = std::move(B);
    B = std::move(R);
  }
}

/// f(g) by Horner's rule, without reduction.
inline ModPoly compose(const ModPoly& f, const ModPoly& g) {
  ModPoly acc(f.modulus());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * g + ModPoly::constant(f.modulus(), f[i]);
  return acc;
}

struct ModReduction {
  ModPoly poly;
  bool degree_dropped = false;
};

/// Coefficientwise reduction of f modulo p; flags p | f_d.
inline ModReduction reduce_mod_p(const IntPoly& f, u64 p) {
  if (p < 3 || p >= kModulusLimit)
    throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " outside [3, 2^32)");
  std::vector<u64> c;
  c.reserve(f.size());
  for (const auto& x : f.coeffs()) c.push_back(reduce(x, p));
  ModReduction out{ModPoly(p, std::move(c)), false};
  out.degree_dropped = out.poly.degree() != f.degree();
  return out;
}

inline std::string to_string(const ModPoly& f) {
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  return to_string(IntPoly(std::move(c)));
}

}  // namespace dynirr::modp
