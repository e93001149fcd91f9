#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "dynirr/exactalg/bigint.hpp"
#include "dynirr/sieve/primes.hpp"

namespace dynirr {

/// Lambda_r for squarefree r <= z and lambda+_e = sum_{lcm(r,s)=e} Lambda_r Lambda_s.
template <class T>
struct SelbergWeights {
  unsigned long z = 0;
  std::vector<unsigned long> primes;  // p <= z
  std::map<unsigned long, T> inner;
  std::map<unsigned long, T> combined;

  T Lambda(unsigned long r) const {
    auto it = inner.find(r);
    return it == inner.end() ? T(0) : it->second;
  }
  T lambda_plus(unsigned long e) const {
    auto it = combined.find(e);
    return it == combined.end() ? T(0) : it->second;
  }
};

/// Exact rational arithmetic is used up to this level.
inline constexpr unsigned long kExactSelbergLimit = 1000;

namespace detail {

struct SmallArith {
  std::vector<int> mu;
  std::vector<unsigned long> phi;
};

inline SmallArith small_arith(unsigned long n) {
  SmallArith a;
  a.mu.assign(n + 1, 1);
  a.phi.resize(n + 1);
  std::iota(a.phi.begin(), a.phi.end(), 0ul);
  std::vector<bool> composite(n + 1, false);
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned long j = p; j <= n; j += p) {
      if (j > p) composite[j] = true;
      a.mu[j] = -a.mu[j];
      a.phi[j] = a.phi[j] / p * (p - 1);
    }
    for (unsigned long j = p * p; j <= n; j += p * p) a.mu[j] = 0;
  }
  return a;
}

/// Builds numerators over a common scale: with H[t] proportional to
/// mu^2(t)/phi(t) and B = sum H, Lambda_r = mu(r) r H[r] A_r / (L B), where
/// A_r = sum_{t <= z/r, (t,r)=1} H[t] and L is the proportionality constant.
template <class T>
void selberg_numerators(unsigned long z, const SmallArith& ar, const std::vector<T>& H,
                        std::map<unsigned long, T>& inner, std::map<unsigned long, T>& combined, T& B) {
  B = T(0);
  for (unsigned long t = 1; t <= z; ++t) B += H[t];
  for (unsigned long r = 1; r <= z; ++r) {
    if (ar.mu[r] == 0) continue;
    T A(0);
    for (unsigned long t = 1; t <= z / r; ++t)
      if (ar.mu[t] != 0 && std::gcd(t, r) == 1) A += H[t];
    T v = H[r] * A;
    v *= T(static_cast<long>(r) * ar.mu[r]);
    inner.emplace(r, v);
  }
  for (auto i = inner.begin(); i != inner.end(); ++i)
    for (auto j = inner.begin(); j != inner.end(); ++j) {
      const unsigned long e = std::lcm(i->first, j->first);
      combined[e] += i->second * j->second;
    }
}

inline std::vector<unsigned long> primes_upto(unsigned long z) {
  std::vector<unsigned long> out;
  for (auto p : small_primes(z)) out.push_back(static_cast<unsigned long>(p));
  return out;
}

}  // namespace detail

/// Weights with h(r) = prod_{p | r} 1/(p-1), G(z) = sum_{r <= z} mu^2(r) h(r),
/// Lambda_r = mu(r) (r / phi(r)) sum_{t <= z/r, (t,r)=1} mu^2(t) h(t) / G(z).
inline SelbergWeights<BigRat> selberg_weights_exact(unsigned long z) {
  if (z < 2) throw Error(ErrorCode::InvalidArgument, "selberg weights need z >= 2");
  const auto ar = detail::small_arith(z);
  BigInt L = 1;
  for (unsigned long t = 1; t <= z; ++t)
    if (ar.mu[t] != 0) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), ar.phi[t]);
  std::vector<BigInt> H(z + 1, 0);
  for (unsigned long t = 1; t <= z; ++t)
    if (ar.mu[t] != 0) H[t] = L / ar.phi[t];

  std::map<unsigned long, BigInt> inner, combined;
  BigInt B;
  detail::selberg_numerators(z, ar, H, inner, combined, B);
  const BigInt den = L * B;
  const BigInt den2 = den * den;

  SelbergWeights<BigRat> w;
  w.z = z;
  w.primes = detail::primes_upto(z);
  for (auto& [r, v] : inner) w.inner.emplace(r, make_rat(v, den));
  for (auto& [e, v] : combined)
    if (v != 0) w.combined.emplace(e, make_rat(v, den2));
  return w;
}

inline SelbergWeights<double> selberg_weights_approx(unsigned long z) {
  if (z < 2) throw Error(ErrorCode::InvalidArgument, "selberg weights need z >= 2");
  const auto ar = detail::small_arith(z);
  std::vector<double> H(z + 1, 0.0);
  for (unsigned long t = 1; t <= z; ++t)
    if (ar.mu[t] != 0) H[t] = 1.0 / static_cast<double>(ar.phi[t]);

  std::map<unsigned long, double> inner, combined;
  double B = 0;
  detail::selberg_numerators(z, ar, H, inner, combined, B);

  SelbergWeights<double> w;
  w.z = z;
  w.primes = detail::primes_upto(z);
  for (auto& [r, v] : inner) w.inner.emplace(r, v / B);
  for (auto& [e, v] : combined)
    if (v != 0) w.combined.emplace(e, v / (B * B));
  return w;
}

namespace detail {

/// Primes p <= z dividing q.
template <class T>
std::vector<unsigned long> small_prime_divisors(unsigned long q, const SelbergWeights<T>& W) {
  std::vector<unsigned long> out;
  for (unsigned long p : W.primes)
    if (q % p == 0) out.push_back(p);
  return out;
}

/// Sum of table[e] over squarefree e | q built from `ps`, with e <= limit.
template <class T>
T divisor_sum(const std::vector<unsigned long>& ps, const std::map<unsigned long, T>& table, unsigned long limit) {
  T acc(0);
  const std::size_t n = ps.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    unsigned long e = 1;
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i)
      if (mask >> i & 1) {
        if (e > limit / ps[i]) fits = false;
        e *= ps[i];
      }
    if (!fits) continue;
    if (auto it = table.find(e); it != table.end()) acc += it->second;
  }
  return acc;
}

}  // namespace detail

/// sum_{e | q} lambda+_e.
template <class T>
T sieve_indicator_sum(unsigned long q, const SelbergWeights<T>& W) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "q must be >= 1");
  return detail::divisor_sum(detail::small_prime_divisors(q, W), W.combined, W.z * W.z);
}

/// (sum_{r | q, r <= z} Lambda_r)^2.
template <class T>
T inner_square(unsigned long q, const SelbergWeights<T>& W) {
  T s = detail::divisor_sum(detail::small_prime_divisors(q, W), W.inner, W.z);
  return s * s;
}

/// sum_e |lambda+_e|.
inline BigRat weight_l1(const SelbergWeights<BigRat>& W) {
  BigRat s = 0;
  for (const auto& [e, v] : W.combined) s += abs(v);
  return s;
}

inline double weight_l1(const SelbergWeights<double>& W) {
  double s = 0;
  for (const auto& [e, v] : W.combined) s += std::abs(v);
  return s;
}

}  // namespace dynirr
