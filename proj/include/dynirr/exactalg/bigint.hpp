#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "dynirr/error.hpp"

namespace dynirr {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
inline BigRat make_rat(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw Error(ErrorCode::ZeroInput, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigRat pow(const BigRat& base, unsigned long exp) {
  BigRat r(pow(BigInt(base.get_num()), exp), pow(BigInt(base.get_den()), exp));
  return r;
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int sign(const BigInt& a) { return sgn(a); }

/// Natural log of |a| for arbitrarily large a (a != 0).
inline double log_abs(const BigInt& a) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

struct OddPart {
  unsigned long nu = 0;
  BigInt u;  // odd, carries the sign
  bool operator==(const OddPart&) const = default;
};

/// m = 2^nu * u with u odd.
inline OddPart odd_part(const BigInt& m) {
  if (m == 0) throw Error(ErrorCode::ZeroInput, "odd_part of zero");
  OddPart r;
  r.nu = mpz_scan1(m.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(r.u.get_mpz_t(), m.get_mpz_t(), r.nu);
  return r;
}

/// Weil logarithmic height max(log|num|, log den), with h(0) = 0.
inline double weil_height(const BigRat& r) {
  if (r == 0) return 0.0;
  return std::max(log_abs(r.get_num()), log_abs(r.get_den()));
}

inline bool is_perfect_square(const BigInt& a) {
  if (a < 0) return false;
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
  return rem == 0;
}

/// Mathematical residue a mod m in [0, m).
inline unsigned long mod_ui(const BigInt& a, unsigned long m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const BigInt& a, const BigInt& p) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

inline long valuation(const BigRat& a, const BigInt& p) {
  return static_cast<long>(valuation(BigInt(a.get_num()), p)) -
         static_cast<long>(valuation(BigInt(a.get_den()), p));
}

/// Smallest prime factor found by trial division up to `bound`; if none is found
/// and the cofactor is a probable prime, the cofactor itself.
inline std::optional<BigInt> find_prime_factor(BigInt n, unsigned long bound = 1ul << 20) {
  n = abs(n);
  if (n < 2) return std::nullopt;
  for (unsigned long d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > n) return n;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return BigInt(d);
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) return n;
  return std::nullopt;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }
inline std::string to_string(const BigRat& a) { return a.get_str(); }

}  // namespace dynirr
