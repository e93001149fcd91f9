#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dynirr/detail/parallel.hpp"
#include "dynirr/modp/stability.hpp"
#include "dynirr/sieve/primes.hpp"
#include "dynirr/sieve/selberg.hpp"
#include "dynirr/sieve/window_sets.hpp"

namespace dynirr {

enum class SumMode { Direct, Flipped };

struct SResult {
  BigInt S;
  std::map<std::uint64_t, long> per_prime;  // inner sum over M_set, good primes only
  std::vector<std::uint64_t> skipped;       // bad reduction
};

namespace detail {

/// (f_d Res(f^(n), f') / p) from the decomposition 2^nu u, using reciprocity:
/// (-1)^(((u-1)/2)((p-1)/2) + nu (p^2-1)/8) (p / |u|).
inline int flipped_symbol(const ResDecomp& r, std::uint64_t p) {
  const unsigned long a = mod_ui(r.u, 4) == 3 ? 1 : 0;  // (u-1)/2 mod 2
  const unsigned long e = a * (((p - 1) / 2) & 1) + (r.nu & 1) * (((p * p - 1) / 8) & 1);
  const int j = modp::jacobi(BigInt(static_cast<unsigned long>(p)), r.u);
  return (e & 1) ? -j : j;
}

}  // namespace detail

/// S = sum_{p in [q_lo, q_hi]} (sum_{n in M} (f_d Res(f^(n), f') / p))^2 over
/// good primes. Direct evaluates the characters modulo p; Flipped uses the
/// reciprocity form with the decompositions from `ws`.
inline SResult compute_S(const IntPoly& f, std::uint64_t q_lo, std::uint64_t q_hi, const WindowSets& ws,
                         SumMode mode, unsigned threads = 1) {
  if (ws.M_set.empty()) throw Error(ErrorCode::InvalidArgument, "M_set is empty");
  const modp::StabilityContext ctx(f);
  const auto primes = primes_in(std::max<std::uint64_t>(q_lo, 2), q_hi);
  const unsigned top = ws.M_set.back();

  std::vector<long> inner(primes.size(), 0);
  std::vector<char> bad(primes.size(), 0);
  detail::parallel_for(primes.size(), threads, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    if (ctx.bad_reduction(p)) {
      bad[i] = 1;
      return;
    }
    long s = 0;
    if (mode == SumMode::Direct) {
      const auto chars = modp::iter_resultant_chars(ctx, p, std::max(top, 2u));
      for (unsigned n : ws.M_set) s += chars.at(n);
    } else {
      for (unsigned n : ws.M_set) s += detail::flipped_symbol(ws.at(n), p);
    }
    inner[i] = s;
  });

  SResult out;
  out.S = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (bad[i]) {
      out.skipped.push_back(primes[i]);
      continue;
    }
    out.per_prime.emplace(primes[i], inner[i]);
    out.S += inner[i] * inner[i];
  }
  return out;
}

/// sum_{e} lambda+_e sum_{q in [q_lo, q_hi], e | q} (q / U) for odd U > 0.
template <class T>
T weighted_character_sum(const BigInt& U, std::uint64_t q_lo, std::uint64_t q_hi, const SelbergWeights<T>& W) {
  if (U <= 0 || mpz_even_p(U.get_mpz_t())) throw Error(ErrorCode::InvalidArgument, "U must be odd and positive");
  T total(0);
  if (q_lo > q_hi) return total;
  std::vector<int> chi(q_hi - q_lo + 1);
  for (std::uint64_t q = q_lo; q <= q_hi; ++q) chi[q - q_lo] = modp::jacobi(BigInt(static_cast<unsigned long>(q)), U);
  for (const auto& [e, lam] : W.combined) {
    long s = 0;
    for (std::uint64_t q = (q_lo + e - 1) / e * e; q <= q_hi; q += e) s += chi[q - q_lo];
    if (s != 0) total += lam * T(s);
  }
  return total;
}

/// Off-diagonal sum over ordered pairs n1 != n2 in M_set.
template <class T>
T compute_T(const WindowSets& ws, std::uint64_t q_lo, std::uint64_t q_hi, const SelbergWeights<T>& W) {
  T total(0);
  const auto& M = ws.M_set;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      const BigInt U = ws.at(M[i]).u * ws.at(M[j]).u;
      if (U <= 0) throw Error(ErrorCode::InvalidArgument, "M_set values must share a sign");
      total += T(2) * weighted_character_sum(U, q_lo, q_hi, W);
    }
  return total;
}

namespace detail {

inline void require_nonsquare_odd(const BigInt& v) {
  if (mpz_even_p(v.get_mpz_t())) throw Error(ErrorCode::EvenModulus, "modulus " + v.get_str() + " is even");
  if (is_perfect_square(v)) throw Error(ErrorCode::SquareModulus, "modulus " + v.get_str() + " is a perfect square");
}

}  // namespace detail

/// sum_{k <= K, e | k} (k / v).
inline long pv_progression_sum(unsigned long e, unsigned long K, unsigned long v) {
  if (e < 1 || K < 1 || v < 3) throw Error(ErrorCode::InvalidArgument, "need e, K >= 1 and v >= 3");
  detail::require_nonsquare_odd(BigInt(v));
  const auto sv = static_cast<std::int64_t>(v);
  long direct = 0;
  for (unsigned long k = e; k <= K; k += e) direct += modp::jacobi(static_cast<std::int64_t>(k), sv);
  if (std::gcd(e, v) == 1) {
    long partial = 0;
    for (unsigned long m = 1; m <= K / e; ++m) partial += modp::jacobi(static_cast<std::int64_t>(m), sv);
    if (direct != modp::jacobi(static_cast<std::int64_t>(e), sv) * partial)
      throw std::logic_error("factored progression sum disagrees");
  }
  return direct;
}

/// max_{K <= K_max} |pv_progression_sum(e, K, v)|. The summand k -> (k/v) has
/// period v and vanishing period sum, so only K <= e v needs scanning.
inline long pv_progression_max(unsigned long e, unsigned long K_max, unsigned long v) {
  if (e < 1 || v < 3) throw Error(ErrorCode::InvalidArgument, "need e >= 1 and v >= 3");
  detail::require_nonsquare_odd(BigInt(v));
  if (std::gcd(e, v) != 1) return 0;
  std::vector<signed char> chi(v);
  for (unsigned long r = 0; r < v; ++r) chi[r] = static_cast<signed char>(modp::jacobi_unsigned(r, v));
  const unsigned long m_max = K_max / e;
  const unsigned long span = std::min(m_max, v);
  long s = 0, best = 0;
  for (unsigned long m = 1; m <= span; ++m) {
    s += chi[(e % v) * (m % v) % v];
    best = std::max(best, std::labs(s));
  }
  if (m_max > v && s != 0) throw std::logic_error("period sum of a non-principal character is nonzero");
  return best;
}

/// Calibrated envelope sqrt(v) (log v + 2).
inline double pv_envelope(unsigned long v) {
  const double x = static_cast<double>(v);
  return std::sqrt(x) * (std::log(x) + 2.0);
}

/// sum_{p <= M} (p / q) over primes p.
inline long prime_char_sum(const BigInt& q, std::uint64_t M) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  detail::require_nonsquare_odd(q);
  long s = 0;
  for_each_prime(2, M, [&](std::uint64_t p) { s += modp::jacobi(BigInt(static_cast<unsigned long>(p)), q); });
  return s;
}

/// sqrt(M) log(q M), for comparison only.
inline double prime_sum_envelope(const BigInt& q, std::uint64_t M) {
  const double m = static_cast<double>(M);
  return std::sqrt(m) * (log_abs(q) + std::log(m));
}

}  // namespace dynirr
