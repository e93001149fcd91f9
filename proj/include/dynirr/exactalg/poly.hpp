#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dynirr/exactalg/bigint.hpp"

namespace dynirr {

/// Dense univariate polynomial, coefficients in ascending order c_0..c_d.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of X^i, zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  std::span<const T> coeffs() const { return c_; }

  /// Mutable access for in-place algorithms; call normalize() afterwards.
  std::vector<T>& raw() { return c_; }
  void normalize() { trim(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<unsigned long>(i));
    return Poly(std::move(d));
  }

  /// Horner evaluation at a point of any ring that accepts T coefficients.
  template <class U>
  U operator()(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static Poly multiply(const Poly& a, const Poly& b);

  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

namespace detail {

template <class T>
std::vector<T> schoolbook(std::span<const T> a, std::span<const T> b) {
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline std::vector<BigInt> schoolbook(std::span<const BigInt> a, std::span<const BigInt> b) {
  std::vector<BigInt> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

inline std::size_t max_bits(std::span<const BigInt> a) {
  std::size_t m = 0;
  for (const auto& c : a) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

/// Packs the coefficients of one sign into a single integer, `limbs` limbs per slot.
inline BigInt kronecker_pack(std::span<const BigInt> a, std::size_t limbs, int want_sign) {
  std::vector<mp_limb_t> buf(a.size() * limbs, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != want_sign) continue;
    std::size_t count = 0;
    mpz_export(buf.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, a[i].get_mpz_t());
  }
  BigInt r;
  mpz_import(r.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return r;
}

inline BigInt kronecker_value(std::span<const BigInt> a, std::size_t limbs) {
  return kronecker_pack(a, limbs, 1) - kronecker_pack(a, limbs, -1);
}

/// Multiplication by evaluation at 2^(64*limbs): one big-integer product, then
/// balanced digit extraction.
inline std::vector<BigInt> kronecker(std::span<const BigInt> a, std::span<const BigInt> b) {
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t guard = 2;
  for (std::size_t n = std::min(a.size(), b.size()); n > 0; n >>= 1) ++guard;
  const std::size_t bits = max_bits(a) + max_bits(b) + guard;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  BigInt prod = kronecker_value(a, limbs) * kronecker_value(b, limbs);
  const int s = sgn(prod);
  prod = abs(prod);

  std::vector<mp_limb_t> buf(out_len * limbs + 1, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, prod.get_mpz_t());

  std::vector<BigInt> r(out_len);
  BigInt half, full, digit;
  mpz_setbit(half.get_mpz_t(), limbs * GMP_NUMB_BITS - 1);
  mpz_setbit(full.get_mpz_t(), limbs * GMP_NUMB_BITS);
  int carry = 0;
  for (std::size_t i = 0; i < out_len; ++i) {
    mpz_import(digit.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    digit += carry;
    carry = 0;
    if (digit >= half) {
      digit -= full;
      carry = 1;
    }
    r[i] = s < 0 ? BigInt(-digit) : digit;
  }
  return r;
}

}  // namespace detail

template <class T>
Poly<T> Poly<T>::multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if constexpr (std::is_same_v<T, BigInt>) {
    if (std::min(a.size(), b.size()) >= 24)
      return Poly(detail::kronecker(std::span<const T>(a.c_), std::span<const T>(b.c_)));
  }
  return Poly(detail::schoolbook(std::span<const T>(a.c_), std::span<const T>(b.c_)));
}

/// Content with the sign of the leading coefficient, so that f / content(f)
/// is primitive with positive leading coefficient.
inline BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (!f.is_zero() && f.leading() < 0) g = -g;
  return g;
}

inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  std::vector<BigInt> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : v) x = exact_div(x, c);
  return IntPoly(std::move(v));
}

inline RatPoly to_rational(const IntPoly& f) {
  std::vector<BigRat> v(f.coeffs().begin(), f.coeffs().end());
  return RatPoly(std::move(v));
}

/// Clears denominators: returns (D, F) with r = F / D, F integral, D > 0 minimal.
inline std::pair<BigInt, IntPoly> clear_denominators(const RatPoly& r) {
  BigInt den = 1;
  for (const auto& c : r.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(r.size());
  for (const auto& c : r.coeffs()) v.push_back(exact_div(den, BigInt(c.get_den())) * c.get_num());
  return {den, IntPoly(std::move(v))};
}

/// f(g) by Horner's rule.
template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g) {
  Poly<T> acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * g;
    acc += Poly<T>::constant(f[i]);
  }
  return acc;
}

inline constexpr std::size_t kDefaultIterateCap = std::size_t{1} << 20;

/// d^n, or nullopt when it exceeds `limit`.
inline std::optional<std::size_t> checked_power(std::size_t d, unsigned n, std::size_t limit) {
  std::size_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (d != 0 && r > limit / d) return std::nullopt;
    r *= d;
  }
  if (r > limit) return std::nullopt;
  return r;
}

/// The n-th iterate f^(n); f^(0) = X. `coeff_cap` bounds the number of
/// coefficients of the result.
inline IntPoly iterate(const IntPoly& f, unsigned n, std::size_t coeff_cap = kDefaultIterateCap) {
  if (n == 0) return IntPoly::x();
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "iterate needs deg f >= 1");
  auto deg = checked_power(static_cast<std::size_t>(f.degree()), n, coeff_cap - 1);
  if (!deg)
    throw Error(ErrorCode::DegreeCapExceeded,
                "deg(f)^" + std::to_string(n) + " exceeds cap of " + std::to_string(coeff_cap) +
                    " coefficients");
  IntPoly g = f;
  for (unsigned i = 1; i < n; ++i) g = compose(f, g);
  return g;
}

/// Canonical text form, descending powers: "x^4-2*x^3+2". Parses back via parse_poly.
template <class T>
std::string to_string(const Poly<T>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const T& c = f.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const T mag = neg ? T(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace dynirr
