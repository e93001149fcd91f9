#pragma once

#include "dynirr/sieve/character_sums.hpp"

namespace dynirr {

struct BoundCheckReport {
  WindowSets window;
  BigInt S;
  std::uint64_t p_char = 0;  // good primes whose M_set characters all equal the required sign
  std::uint64_t good_primes = 0;
  std::uint64_t skipped = 0;
  BigInt lhs;  // p_char * t^2
  BigInt rhs;  // 64 S
  bool holds = false;
};

/// Evaluates both sides of p_char <= 64 S / t^2 exactly.
inline BoundCheckReport bound_check(const IntPoly& f, std::uint64_t q_lo, std::uint64_t q_hi, unsigned N_param,
                                    unsigned t, unsigned threads = 1) {
  BoundCheckReport r;
  r.window = build_window_sets(f, N_param, t);
  const SResult s = compute_S(f, q_lo, q_hi, r.window, SumMode::Direct, threads);
  r.S = s.S;
  r.skipped = s.skipped.size();
  const long m = static_cast<long>(r.window.M_set.size());
  for (const auto& [p, inner] : s.per_prime) {
    ++r.good_primes;
    if (inner == modp::required_sign(f.degree(), p) * m) ++r.p_char;
  }
  r.lhs = BigInt(static_cast<unsigned long>(r.p_char)) * t * t;
  r.rhs = 64 * r.S;
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace dynirr
