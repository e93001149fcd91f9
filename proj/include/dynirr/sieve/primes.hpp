#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dynirr/error.hpp"

namespace dynirr {

/// Primes up to n by the plain sieve of Eratosthenes.
inline std::vector<std::uint64_t> small_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Calls fn(p) for each prime p in [lo, hi] in ascending order; segmented sieve.
template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn, std::uint64_t segment = 1u << 18) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<std::uint64_t>(lo, 2);
  const auto base = small_primes(isqrt(hi));
  std::vector<char> mark;
  for (std::uint64_t s = lo; s <= hi; s += segment) {
    const std::uint64_t e = std::min(hi, s + segment - 1);
    mark.assign(e - s + 1, 1);
    for (std::uint64_t p : base) {
      if (p * p > e) break;
      std::uint64_t start = std::max(p * p, (s + p - 1) / p * p);
      for (std::uint64_t j = start; j <= e; j += p) mark[j - s] = 0;
    }
    for (std::uint64_t i = s; i <= e; ++i)
      if (mark[i - s]) fn(i);
    if (e == hi) break;
  }
}

/// The primes in [lo, hi], ascending.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace dynirr
