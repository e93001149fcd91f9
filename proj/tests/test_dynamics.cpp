#include <gtest/gtest.h>

#include <random>

#include "dynirr/dynamics.hpp"
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
const IntPoly kCubic = P({1, 0, -3, 2});

/// f(X + u)
IntPoly shift(const IntPoly& f, long u) { return compose(f, P({u, 1})); }

}  // namespace

TEST(Orbit, RealEscape) {
  EXPECT_EQ(escape_radius(kQuad), BigRat(3));
  auto r = is_preperiodic(kQuad, BigRat(0), 100);
  ASSERT_TRUE(r.not_preperiodic());
  EXPECT_EQ(std::get<NotPreperiodic>(r.status).certificate, (std::variant<RealEscape, ValuationEscape>{RealEscape{3}}));
}

TEST(Orbit, FixedPointAfterOneStep) {
  auto r = is_preperiodic(kQuartic, BigRat(0), 100);
  ASSERT_TRUE(r.preperiodic());
  const auto& pp = std::get<Preperiodic>(r.status);
  EXPECT_EQ(pp.tail_length, 1u);
  EXPECT_EQ(pp.cycle_length, 1u);
  EXPECT_EQ(pp.orbit, (std::vector<BigRat>{0, 2}));
}

TEST(Orbit, ValuationEscape) {
  auto r = is_preperiodic(kQuartic, make_rat(3, 2), 100);
  ASSERT_TRUE(r.not_preperiodic());
  const auto& c = std::get<NotPreperiodic>(r.status).certificate;
  ASSERT_TRUE(std::holds_alternative<ValuationEscape>(c));
  EXPECT_EQ(std::get<ValuationEscape>(c).prime, 2);
  EXPECT_EQ(std::get<ValuationEscape>(c).step, 1u);
}

TEST(Orbit, PeriodicPointIsPreperiodic) {
  // 0 -> 1 -> 0 under 2x^3-3x^2+1
  auto r = is_preperiodic(kCubic, BigRat(0), 10);
  ASSERT_TRUE(r.preperiodic());
  EXPECT_EQ(std::get<Preperiodic>(r.status).tail_length, 0u);
  EXPECT_EQ(std::get<Preperiodic>(r.status).cycle_length, 2u);
}

TEST(Orbit, ChebyshevCycleOfLengthTwo) {
  // x^2 - 1: 0 -> -1 -> 0
  auto r = is_preperiodic(P({-1, 0, 1}), BigRat(0), 10);
  ASSERT_TRUE(r.preperiodic());
  EXPECT_EQ(std::get<Preperiodic>(r.status).cycle_length, 2u);
}

TEST(Orbit, UndecidedWhenLeadingCoefficientHidesDenominator) {
  // 2x^2: 1/2 -> 1/2 is fixed, but 1/4 -> 1/8 -> 1/32 ... only escapes through 2 | f_d.
  auto r = is_preperiodic(P({0, 0, 2}), make_rat(1, 4), 5);
  EXPECT_TRUE(r.undecided());
  EXPECT_EQ(std::get<Undecided>(r.status).steps_taken, 5u);
  EXPECT_TRUE(is_preperiodic(P({0, 0, 2}), make_rat(1, 2), 5).preperiodic());
}

TEST(Orbit, Reproducible) {
  for (long c = -3; c <= 3; ++c) {
    const IntPoly f = P({c, 0, 1});
    for (long x = -2; x <= 2; ++x) EXPECT_EQ(is_preperiodic(f, BigRat(x), 50), is_preperiodic(f, BigRat(x), 50));
  }
}

TEST(Orbit, BruteForceAgreementOnSmallQuadratics) {
  // Ground truth by plain iteration: integer orbits under monic x^2+c either repeat or exceed 10^6.
  for (long c = -4; c <= 4; ++c) {
    const IntPoly f = P({c, 0, 1});
    for (long x0 = -5; x0 <= 5; ++x0) {
      std::vector<BigInt> seen{x0};
      BigInt x = x0;
      bool repeats = false;
      for (int i = 0; i < 100 && abs(x) < 1000000; ++i) {
        x = f(x);
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
          repeats = true;
          break;
        }
        seen.push_back(x);
      }
      auto r = is_preperiodic(f, BigRat(x0), 1000);
      EXPECT_EQ(r.preperiodic(), repeats) << "c=" << c << " x0=" << x0;
      EXPECT_FALSE(r.undecided());
    }
  }
}

TEST(Classify, XSquaredPlusOne) {
  auto info = classify(kQuad);
  ASSERT_TRUE(info.in_P1());
  EXPECT_EQ(info.p1->g, IntPoly::constant(1));
  EXPECT_EQ(info.p1->a, 2);
  EXPECT_EQ(info.p1->b, 0);
  EXPECT_EQ(info.in_P2, Membership::No);
  EXPECT_EQ(info.in_P3, Membership::No);
  EXPECT_EQ(info.gamma, BigRat(0));
  EXPECT_TRUE(info.gamma_preperiodic->not_preperiodic());
  EXPECT_TRUE(info.zero_preperiodic.not_preperiodic());
}

TEST(Classify, EisensteinQuartic) {
  auto info = classify(kQuartic);
  ASSERT_TRUE(info.in_P1());
  EXPECT_EQ((info.p1->g * info.p1->g * IntPoly{info.p1->b, info.p1->a}), kQuartic.derivative());
  EXPECT_EQ(info.in_P3, Membership::Yes);
  EXPECT_EQ(info.gamma, make_rat(3, 2));
  EXPECT_TRUE(info.gamma_preperiodic->not_preperiodic());
  EXPECT_TRUE(info.zero_preperiodic.preperiodic());
}

TEST(Classify, CubicInP2) {
  auto info = classify(kCubic);
  EXPECT_FALSE(info.in_P1());
  EXPECT_EQ(info.in_P2, Membership::Yes);
  EXPECT_EQ(info.in_P3, Membership::No);
  EXPECT_EQ(info.gamma, BigRat(1));
  EXPECT_TRUE(info.gamma_preperiodic->preperiodic());
}

TEST(Classify, NeitherClass) {
  // f' = 3x^2 - 1 has no linear odd part; x^3 - x has a middle term.
  auto info = classify(P({0, -1, 0, 1}));
  EXPECT_FALSE(info.in_P1());
  EXPECT_EQ(info.in_P2, Membership::No);
  EXPECT_FALSE(info.gamma.has_value());
  EXPECT_FALSE(info.gamma_preperiodic.has_value());
}

TEST(Classify, WitnessAbsorbsContent) {
  // f' = (3x)^2 (4x - 4)
  const IntPoly fp = P({0, 3}) * P({0, 3}) * P({-4, 4});
  IntPoly f;
  {
    std::vector<BigInt> c(fp.size() + 1);
    for (std::size_t i = 0; i < fp.size(); ++i) c[i + 1] = exact_div(fp[i], BigInt(static_cast<unsigned long>(i + 1)));
    f = IntPoly(std::move(c));
  }
  ASSERT_EQ(f.derivative(), fp);
  auto w = p1_witness(f);
  ASSERT_TRUE(w);
  EXPECT_EQ((w->g * w->g * IntPoly{w->b, w->a}), fp);
  EXPECT_EQ(make_rat(-w->b, w->a), BigRat(1));
}

TEST(Classify, P1StableUnderShift) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-5, 5);
  int members = 0;
  while (members < 20) {
    // r x^d + s x^(d-1) + t lies in P1 for even d
    const long d = 2 * (1 + static_cast<long>(rng() % 2));
    long r = 0, s = coef(rng);
    while (r == 0) r = coef(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = r;
    c[static_cast<std::size_t>(d - 1)] = s;
    c[0] = coef(rng);
    const IntPoly f(std::move(c));
    auto base = p1_witness(f);
    ASSERT_TRUE(base) << to_string(f);
    ++members;
    const BigRat gamma = make_rat(-base->b, base->a);
    for (long u = -2; u <= 2; ++u) {
      auto w = p1_witness(shift(f, u));
      ASSERT_TRUE(w) << to_string(f) << " u=" << u;
      EXPECT_EQ(make_rat(-w->b, w->a), gamma - u);
    }
  }
}

TEST(Eisenstein, Examples) {
  auto m = eisenstein_member(1, 2, 4);
  EXPECT_EQ(m.f, kQuartic);
  EXPECT_EQ(m.witness, BigInt(2));
  EXPECT_FALSE(eisenstein_member(1, 4, 3).witness.has_value());
  EXPECT_EQ(eisenstein_member(2, 12, 3).witness, BigInt(3));  // 2 | a, 2^2 | c
  EXPECT_EQ(eisenstein_member(5, -5, 2).witness, std::nullopt);
  EXPECT_THROW(eisenstein_member(0, 2, 3), Error);
}

TEST(Eisenstein, ZeroOrbitIsConstant) {
  for (long a : {1L, -3L, 7L})
    for (long c : {2L, -6L, 15L}) {
      const IntPoly f = eisenstein_member(a, c, 3 + static_cast<unsigned>(std::abs(a) % 3)).f;
      for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(iterate(f, n)(BigInt(0)), c);
    }
}

TEST(SquareProducts, Examples) {
  EXPECT_TRUE(find_square_products(kQuad, 3, 6).empty());
  EXPECT_TRUE(find_square_products(kQuad, 4, 4).empty());
  // u_2 = 1, so (2, n) appears iff u_n is a square.
  auto pairs = find_square_products(kQuad, 2, 4);
  for (auto [m, n] : pairs) EXPECT_EQ(m, 2u);
  EXPECT_TRUE(find_square_products(kQuartic, 2, 4).empty());
}

TEST(SquareProducts, ZeroResultantPropagates) {
  try {
    find_square_products(P({0, 0, 1}), 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroResultant);
  }
}

TEST(ProductFormula, CubicP2) {
  for (auto [m, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 4u}}) {
    auto s = res_product_sides(kCubic, m, n);
    EXPECT_EQ(s.lhs, s.rhs) << m << "," << n;
  }
  EXPECT_TRUE(verify_res_product_formula(kCubic, 2, 3));
}

TEST(ProductFormula, Multiplicativity) {
  const IntPoly fp = kCubic.derivative();
  EXPECT_EQ(resultant(iterate(kCubic, 2) * iterate(kCubic, 3), fp),
            resultant(iterate(kCubic, 2), fp) * resultant(iterate(kCubic, 3), fp));
}

TEST(ProductFormula, OtherP2Members) {
  // a x^d - (a+1) x^(d-1) + 1 maps 0 -> 1 -> 0.
  for (long d = 2; d <= 4; ++d)
    for (long a : {2L, -3L, 5L}) {
      std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
      c[static_cast<std::size_t>(d)] = a;
      c[static_cast<std::size_t>(d - 1)] = -a - 1;
      c[0] = 1;
      const IntPoly f(std::move(c));
      ASSERT_EQ(classify(f).in_P2, Membership::Yes) << to_string(f);
      auto s = res_product_sides(f, 2, 3);
      EXPECT_EQ(s.lhs, s.rhs) << to_string(f);
    }
}

TEST(ProductFormula, ClassMismatch) {
  try {
    res_product_sides(kQuad, 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassMismatch);
  }
}
