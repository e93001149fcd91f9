#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "dynirr/exactalg/bigint.hpp"

namespace dynirr::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Moduli stay below 2^32 so that a product of two residues fits in 64 bits.
inline constexpr u64 kModulusLimit = u64{1} << 32;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 add_mod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

/// Inverse modulo a prime (Fermat).
inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

inline u64 reduce(const BigInt& a, u64 p) { return mod_ui(a, static_cast<unsigned long>(p)); }

namespace detail {

inline unsigned low_bits(u64 x) { return static_cast<unsigned>(x & 7); }
inline unsigned low_bits(const BigInt& x) { return static_cast<unsigned>(mpz_fdiv_ui(x.get_mpz_t(), 8)); }

inline unsigned strip_twos(u64& x) {
  const unsigned z = static_cast<unsigned>(std::countr_zero(x));
  x >>= z;
  return z;
}
inline unsigned strip_twos(BigInt& x) {
  const auto z = mpz_scan1(x.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), z);
  return static_cast<unsigned>(z);
}

inline bool is_zero(u64 x) { return x == 0; }
inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_one(u64 x) { return x == 1; }
inline bool is_one(const BigInt& x) { return x == 1; }

/// Binary Jacobi algorithm for 0 <= a and odd n > 0: strip factors of two with
/// (2/n) = (-1)^((n^2-1)/8), swap with (m/n) = (-1)^((m-1)/2 (n-1)/2) (n/m).
template <class UInt>
int jacobi_nonneg(UInt a, UInt n) {
  a %= n;
  int t = 1;
  while (!is_zero(a)) {
    if (strip_twos(a) & 1) {
      const unsigned r = low_bits(n);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((low_bits(a) & 3) == 3 && (low_bits(n) & 3) == 3) t = -t;
    a %= n;
  }
  return is_one(n) ? t : 0;
}

}  // namespace detail

/// Jacobi symbol (a/v) for odd v; the sign of v is ignored and (a/±1) = 1.
inline int jacobi(std::int64_t a, std::int64_t v) {
  if ((v & 1) == 0) throw Error(ErrorCode::EvenModulus, "jacobi modulus " + std::to_string(v) + " is even");
  const u64 n = v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
  if (n == 1) return 1;
  const std::int64_t sn = static_cast<std::int64_t>(n);
  u64 r = static_cast<u64>(((a % sn) + sn) % sn);
  return detail::jacobi_nonneg<u64>(r, n);
}

inline int jacobi(const BigInt& a, const BigInt& v) {
  if (mpz_even_p(v.get_mpz_t())) throw Error(ErrorCode::EvenModulus, "jacobi modulus " + v.get_str() + " is even");
  BigInt n = abs(v);
  if (n == 1) return 1;
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return detail::jacobi_nonneg<BigInt>(std::move(r), std::move(n));
}

/// Jacobi symbol (a/n) for unsigned a and odd n > 0.
inline int jacobi_unsigned(u64 a, u64 n) { return detail::jacobi_nonneg<u64>(a % n, n); }

/// Legendre symbol of a residue modulo an odd prime.
inline int legendre(u64 a, u64 p) { return jacobi_unsigned(a, p); }

}  // namespace dynirr::modp
