#include <gtest/gtest.h>

#include <cmath>

#include "dynirr/sieve.hpp"
#include "oracles.hpp"

using namespace dynirr;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

const IntPoly kQuad = P({1, 0, 1});
const IntPoly kQuartic = P({2, 0, 0, -2, 1});

bool squarefree(unsigned long n) {
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

unsigned long largest_prime_factor(unsigned long n) {
  unsigned long best = 1;
  for (unsigned long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  return n > 1 ? std::max(best, n) : best;
}

}  // namespace

TEST(Primes, Examples) {
  EXPECT_EQ(primes_in(10, 20), (std::vector<std::uint64_t>{11, 13, 17, 19}));
  EXPECT_TRUE(primes_in(14, 16).empty());
  EXPECT_EQ(primes_in(2, 1000000).size(), 78498u);
  EXPECT_EQ(primes_in(2, 2), (std::vector<std::uint64_t>{2}));
}

TEST(Primes, SegmentsMatchTrialDivision) {
  std::vector<std::uint64_t> got;
  for_each_prime(900, 5000, [&](std::uint64_t p) { got.push_back(p); }, 97);
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 900; n <= 5000; ++n)
    if (oracle::is_prime(n)) want.push_back(n);
  EXPECT_EQ(got, want);
}

TEST(Selberg, SmallLevels) {
  auto w2 = selberg_weights_exact(2);
  EXPECT_EQ(w2.inner, (std::map<unsigned long, BigRat>{{1, 1}, {2, -1}}));
  EXPECT_EQ(w2.combined, (std::map<unsigned long, BigRat>{{1, 1}, {2, -1}}));

  auto w3 = selberg_weights_exact(3);
  EXPECT_EQ(w3.inner, (std::map<unsigned long, BigRat>{{1, 1}, {2, make_rat(-4, 5)}, {3, make_rat(-3, 5)}}));
  EXPECT_EQ(w3.combined, (std::map<unsigned long, BigRat>{
                             {1, 1}, {2, make_rat(-24, 25)}, {3, make_rat(-21, 25)}, {6, make_rat(24, 25)}}));
}

TEST(Selberg, IndicatorExamples) {
  auto w3 = selberg_weights_exact(3);
  EXPECT_EQ(sieve_indicator_sum(5, w3), 1);
  EXPECT_EQ(sieve_indicator_sum(6, w3), make_rat(4, 25));
  EXPECT_EQ(sieve_indicator_sum(4, selberg_weights_exact(2)), 0);
}

TEST(Selberg, WeightInvariants) {
  for (unsigned long z : {2ul, 5ul, 10ul, 30ul, 57ul}) {
    auto w = selberg_weights_exact(z);
    EXPECT_EQ(w.Lambda(1), 1);
    for (const auto& [r, v] : w.inner) EXPECT_LE(abs(v), 1) << "z=" << z << " r=" << r;
    for (const auto& [e, v] : w.combined) {
      EXPECT_TRUE(squarefree(e));
      EXPECT_LE(e, z * z);
      EXPECT_LE(largest_prime_factor(e), z);
    }
  }
}

TEST(Selberg, QuadraticFormIdentity) {
  for (unsigned long z : {2ul, 3ul, 10ul, 30ul}) {
    auto w = selberg_weights_exact(z);
    for (unsigned long q = 1; q <= 10000; ++q) {
      const BigRat s = sieve_indicator_sum(q, w);
      ASSERT_EQ(s, inner_square(q, w)) << "z=" << z << " q=" << q;
      bool coprime = true;
      for (auto p : w.primes) coprime = coprime && q % p != 0;
      if (coprime) {
        ASSERT_EQ(s, 1);
      }
      ASSERT_GE(s, 0);
    }
  }
}

TEST(Selberg, FloatMatchesExactAtThirty) {
  auto we = selberg_weights_exact(30);
  auto wf = selberg_weights_approx(30);
  for (const auto& [e, v] : we.combined) EXPECT_NEAR(wf.lambda_plus(e), v.get_d(), 1e-12);
  for (unsigned long q = 1; q <= 5000; ++q)
    ASSERT_NEAR(sieve_indicator_sum(q, wf), sieve_indicator_sum(q, we).get_d(), 1e-9);
}

TEST(Selberg, SiftedCountAtTenThousand) {
  const unsigned long Z = 10000;
  const auto z = static_cast<unsigned long>(std::pow(static_cast<double>(Z), 0.25));
  auto w = selberg_weights_exact(z);
  BigRat total = 0;
  for (unsigned long q = Z; q <= 2 * Z; ++q) total += sieve_indicator_sum(q, w);
  EXPECT_LE(total.get_d(), 3.0 * Z / std::log(static_cast<double>(Z)));
  EXPECT_GE(total, static_cast<long>(primes_in(Z, 2 * Z).size()));
}

TEST(Selberg, WeightMassBelowSquare) {
  double prev = 1e9;
  for (unsigned long z : {10ul, 30ul, 100ul}) {
    const double l1 = weight_l1(selberg_weights_exact(z)).get_d();
    const double ratio = l1 / static_cast<double>(z * z);
    EXPECT_TRUE(std::isfinite(l1));
    EXPECT_LT(ratio, prev);
    prev = ratio;
  }
}

TEST(WindowSets, XSquaredPlusOne) {
  auto w = build_window_sets(kQuad, 2, 3);
  ASSERT_EQ(w.decomp.size(), 4u);
  EXPECT_EQ(w.at(2), (ResDecomp{2, 5, 1}));
  EXPECT_EQ(w.at(3), (ResDecomp{3, 8, 5}));
  EXPECT_EQ(w.at(4), (ResDecomp{4, 17, 13}));
  EXPECT_EQ(w.at(5), (ResDecomp{5, 32, 677}));
  // classes: (1,1) (1,0) (1,1) (1,0) -> tie between index 0 and 1, lowest wins
  EXPECT_EQ(w.N_set, (std::vector<unsigned>{3, 5}));
  EXPECT_EQ(w.M_set, (std::vector<unsigned>{3, 5}));
  EXPECT_GE(4 * w.N_set.size(), w.t);
  EXPECT_GE(8 * w.M_set.size(), w.t);
  for (unsigned long m = 3; m <= 99; m += 2) EXPECT_TRUE(parity_identity_holds(w, m));
}

TEST(WindowSets, Quartic) {
  auto w = build_window_sets(kQuartic, 2, 4);
  for (unsigned r : w.N_set)
    for (unsigned s : w.N_set) {
      EXPECT_EQ(mod_ui(BigInt(w.at(r).u + w.at(s).u), 4), 2u);
      EXPECT_EQ((w.at(r).nu + w.at(s).nu) % 2, 0u);
    }
  for (unsigned m : w.M_set)
    for (unsigned n : w.M_set) EXPECT_GT(w.at(m).u * w.at(n).u, 0);
  for (unsigned long m = 3; m <= 99; m += 2) EXPECT_TRUE(parity_identity_holds(w, m));
}

TEST(WindowSets, Budget) {
  try {
    build_window_sets(kQuartic, 2, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(SumS, InnerSumAtThree) {
  WindowSets w = build_window_sets(kQuad, 2, 3);
  w.M_set = {3, 4};
  for (SumMode mode : {SumMode::Direct, SumMode::Flipped}) {
    auto r = compute_S(kQuad, 3, 3, w, mode);
    EXPECT_EQ(r.per_prime.at(3), -2);
    EXPECT_EQ(r.S, 4);
  }
}

TEST(SumS, ModesAgreeTermwise) {
  auto w = build_window_sets(kQuartic, 2, 4);
  auto direct = compute_S(kQuartic, 100, 800, w, SumMode::Direct);
  auto flipped = compute_S(kQuartic, 100, 800, w, SumMode::Flipped);
  EXPECT_EQ(direct.per_prime, flipped.per_prime);
  EXPECT_EQ(direct.S, flipped.S);
  EXPECT_EQ(direct.skipped, flipped.skipped);
}

TEST(SumS, ModesAgreeWithNegativeU) {
  bool saw_negative = false;
  for (const IntPoly& f : {P({-1, 1, 1}), P({-2, 1, 1}), P({0, -1, -1, 1}), P({2, -2, 1})}) {
    auto w = build_window_sets(f, 2, 5);
    for (const auto& r : w.decomp) saw_negative = saw_negative || r.u < 0;
    w.M_set.clear();
    for (unsigned n = 2; n <= 7; ++n) w.M_set.push_back(n);
    auto direct = compute_S(f, 3, 400, w, SumMode::Direct);
    auto flipped = compute_S(f, 3, 400, w, SumMode::Flipped);
    EXPECT_EQ(direct.per_prime, flipped.per_prime) << to_string(f);
  }
  EXPECT_TRUE(saw_negative);
}

TEST(SumS, EmptyRangeAndThreads) {
  auto w = build_window_sets(kQuartic, 2, 4);
  EXPECT_EQ(compute_S(kQuartic, 24, 28, w, SumMode::Direct).S, 0);
  auto one = compute_S(kQuartic, 100, 2000, w, SumMode::Direct, 1);
  auto four = compute_S(kQuartic, 100, 2000, w, SumMode::Direct, 4);
  EXPECT_EQ(one.per_prime, four.per_prime);
}

TEST(SumT, SingletonIsZero) {
  auto w = build_window_sets(kQuad, 2, 3);
  w.M_set = {3};
  EXPECT_EQ(compute_T(w, 8, 16, selberg_weights_exact(2)), 0);
}

TEST(SumT, BruteForcePair) {
  auto W = selberg_weights_exact(2);
  BigRat want = 0;
  for (long q = 8; q <= 16; ++q) {
    const int j = oracle::factored_jacobi(q, 15);
    want += W.lambda_plus(1) * j;
    if (q % 2 == 0) want += W.lambda_plus(2) * j;
  }
  EXPECT_EQ(weighted_character_sum(BigInt(15), 8, 16, W), want);

  WindowSets w;
  w.N_param = 2;
  w.decomp = {ResDecomp{2, 0, 3}, ResDecomp{3, 0, 5}};
  w.M_set = {2, 3};
  EXPECT_EQ(compute_T(w, 8, 16, W), 2 * want);
  w.M_set = {3, 2};
  EXPECT_EQ(compute_T(w, 8, 16, W), 2 * want);
}

TEST(PvSums, Examples) {
  for (unsigned long v : {3ul, 5ul, 7ul, 11ul, 13ul}) EXPECT_EQ(pv_progression_sum(1, v, v), 0);
  EXPECT_EQ(pv_progression_sum(3, 100, 15), 0);
  long s = 0;
  for (long m = 1; m <= 15; ++m) s += oracle::factored_jacobi(m, 15);
  EXPECT_EQ(pv_progression_sum(2, 30, 15), oracle::factored_jacobi(2, 15) * s);
  EXPECT_THROW(pv_progression_sum(1, 10, 9), Error);
  EXPECT_THROW(pv_progression_sum(1, 10, 8), Error);
}

TEST(PvSums, MaxMatchesDirect) {
  for (unsigned long v : {3ul, 15ul, 21ul, 35ul, 99ul})
    for (unsigned long e = 1; e <= 6; ++e) {
      long best = 0;
      for (unsigned long K = 1; K <= 400; ++K) best = std::max(best, std::labs(pv_progression_sum(e, K, v)));
      EXPECT_EQ(pv_progression_max(e, 400, v), best) << e << " " << v;
    }
}

TEST(PrimeCharSum, Examples) {
  EXPECT_EQ(prime_char_sum(BigInt(3), 10), -1);
  EXPECT_EQ(prime_char_sum(BigInt(3), 1), 0);
  for (unsigned long q : {5ul, 15ul, 101ul})
    EXPECT_LE(std::labs(prime_char_sum(BigInt(q), 5000)), static_cast<long>(primes_in(2, 5000).size()));
  try {
    prime_char_sum(BigInt(9), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SquareModulus);
  }
}
