#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dynirr/dynamics/square_products.hpp"
#include "dynirr/exactalg/division.hpp"
#include "dynirr/sieve/character_sums.hpp"

namespace dynirr {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline IntPoly seeded_poly(std::mt19937_64& rng, long degree, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<BigInt> c(degree + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return IntPoly(std::move(c));
}

/// Runs `body`, which returns a mismatch count and fills `detail`; exceptions fail the check.
inline VerifyCheck run_check(std::string name, const std::function<long(std::string&)>& body) {
  VerifyCheck c{std::move(name), false, {}};
  try {
    const long bad = body(c.detail);
    c.passed = bad == 0;
    if (!c.passed) c.detail = std::to_string(bad) + " mismatches; " + c.detail;
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

inline long check_jacobi(std::mt19937_64& rng, std::string& detail) {
  std::uniform_int_distribution<std::int64_t> a_dist(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 500000);
  long bad = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t a = a_dist(rng);
    const std::int64_t n = 2 * n_dist(rng) + 1;
    const BigInt A(static_cast<long>(a)), N(static_cast<long>(n));
    if (modp::jacobi(a, n) != mpz_jacobi(A.get_mpz_t(), N.get_mpz_t())) ++bad;
  }
  detail = "5000 pairs against mpz_jacobi";
  return bad;
}

inline long check_chars(std::mt19937_64& rng, std::string& detail) {
  std::vector<IntPoly> polys = {IntPoly({1, 0, 1}), IntPoly({2, 0, 0, -2, 1})};
  while (polys.size() < 4) {
    IntPoly g = seeded_poly(rng, 2 + static_cast<long>(rng() % 2), 4);
    if (discriminant(g) != 0) polys.push_back(std::move(g));
  }
  long bad = 0, compared = 0;
  for (const auto& f : polys) {
    const modp::StabilityContext ctx(f);
    std::vector<BigInt> exact;
    for (unsigned n = 2; n <= 4; ++n) exact.push_back(f.leading() * iterate_resultant(f, n));
    for (std::uint64_t p : primes_in(3, 200)) {
      if (ctx.bad_reduction(p)) continue;
      const auto chars = modp::iter_resultant_chars(ctx, p, 4);
      for (unsigned n = 2; n <= 4; ++n) {
        ++compared;
        if (chars.at(n) != modp::legendre(modp::reduce(exact[n - 2], p), p)) ++bad;
      }
    }
  }
  detail = std::to_string(compared) + " characters against exact resultants";
  return bad;
}

inline long check_flip(std::string& detail) {
  long bad = 0, primes = 0;
  const std::vector<std::pair<IntPoly, unsigned>> cases = {
      {IntPoly({1, 0, 1}), 6}, {IntPoly({-1, 1, 1}), 6}, {IntPoly({0, -1, -1, 1}), 4}, {IntPoly({2, 0, 0, -2, 1}), 3}};
  for (const auto& [f, t] : cases) {
    const WindowSets ws = build_window_sets(f, 2, t);
    const SResult a = compute_S(f, 3, 3000, ws, SumMode::Direct);
    const SResult b = compute_S(f, 3, 3000, ws, SumMode::Flipped);
    primes += static_cast<long>(a.per_prime.size());
    if (a.per_prime != b.per_prime || a.S != b.S) ++bad;
  }
  detail = std::to_string(primes) + " prime terms over 4 polynomials";
  return bad;
}

inline long check_parity(std::string& detail) {
  long bad = 0;
  for (const IntPoly& f : {IntPoly({1, 0, 1}), IntPoly({-1, 1, 1}), IntPoly({2, 0, 0, -2, 1})}) {
    const WindowSets ws = build_window_sets(f, 2, f.degree() == 2 ? 8 : 4);
    for (unsigned long m = 3; m < 100; m += 2)
      if (!parity_identity_holds(ws, m)) ++bad;
  }
  detail = "odd m in [3, 99]";
  return bad;
}

inline long check_res_mn(std::string& detail) {
  long bad = 0;
  const IntPoly f({1, 0, -3, 2});
  for (auto [m, n] : {std::pair{2u, 3u}, std::pair{2u, 4u}, std::pair{3u, 4u}})
    if (!verify_res_product_formula(f, m, n)) ++bad;
  for (long a = 1; a <= 3; ++a)
    for (long d = 3; d <= 4; ++d) {
      std::vector<BigInt> c(d + 1, 0);
      c[0] = 1;
      c[d - 1] = -(a + 1);
      c[d] = a;
      if (!verify_res_product_formula(IntPoly(std::move(c)), 2, 3)) ++bad;
    }
  detail = "2x^3-3x^2+1 at (2,3),(2,4),(3,4) and a x^d-(a+1)x^(d-1)+1 at (2,3)";
  return bad;
}

/// f^(n) = f^(m) G + f^(n-m)(0).
inline long check_division(std::mt19937_64& rng, std::string& detail) {
  long bad = 0, cases = 0;
  for (int i = 0; i < 12; ++i) {
    const IntPoly f = seeded_poly(rng, 2 + (i % 2), 3);
    for (unsigned n = 2; n <= 4; ++n)
      for (unsigned m = 1; m < n; ++m) {
        ++cases;
        const RatDivision qr = divide_with_remainder(iterate(f, n), iterate(f, m));
        const BigInt want = iterate(f, n - m)(BigInt(0));
        const bool ok = qr.remainder.is_zero() ? want == 0 : (qr.remainder.degree() == 0 && qr.remainder.leading() == want);
        if (!ok) ++bad;
      }
  }
  detail = std::to_string(cases) + " (f, m, n) triples";
  return bad;
}

inline long check_selberg(std::string& detail) {
  long bad = 0;
  for (unsigned long z : {2ul, 3ul, 10ul, 30ul}) {
    const auto W = selberg_weights_exact(z);
    if (W.Lambda(1) != 1) ++bad;
    for (unsigned long q = 1; q <= 10000; ++q)
      if (sieve_indicator_sum(q, W) != inner_square(q, W)) ++bad;
  }
  detail = "q <= 10^4, z in {2, 3, 10, 30}";
  return bad;
}

inline long check_pv(std::string& detail) {
  long bad = 0;
  double worst = 0;
  for (unsigned long v = 3; v <= 2001; v += 2) {
    if (is_perfect_square(BigInt(v))) continue;
    const double env = pv_envelope(v);
    for (unsigned long e = 1; e <= 10; ++e) {
      const long m = pv_progression_max(e, 100000, v);
      worst = std::max(worst, m / env);
      if (m > env) ++bad;
    }
  }
  detail = "max |sum| / envelope = " + std::to_string(worst);
  return bad;
}

}  // namespace detail

/// Cross-module oracle suite. Randomized checks draw from `seed`.
inline VerifyReport verify_suite(std::uint64_t seed = 1) {
  VerifyReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  r.checks.push_back(detail::run_check("jacobi", [&](std::string& d) { return detail::check_jacobi(rng, d); }));
  r.checks.push_back(detail::run_check("resultant_chars", [&](std::string& d) { return detail::check_chars(rng, d); }));
  r.checks.push_back(detail::run_check("flip_equality", detail::check_flip));
  r.checks.push_back(detail::run_check("parity_identity", detail::check_parity));
  r.checks.push_back(detail::run_check("res_product_formula", detail::check_res_mn));
  r.checks.push_back(detail::run_check("division_identity", [&](std::string& d) { return detail::check_division(rng, d); }));
  r.checks.push_back(detail::run_check("selberg_quadratic_form", detail::check_selberg));
  r.checks.push_back(detail::run_check("pv_envelope", detail::check_pv));
  return r;
}

}  // namespace dynirr
