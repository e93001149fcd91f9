// Acceptance criteria. Usage: acceptance [cNN ...]; no arguments runs all.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dynirr/dynamics.hpp"
#include "dynirr/harness.hpp"

using namespace dynirr;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

const IntPoly kQuad = P({1, 0, 1});
const IntPoly kShiftedQuad = P({2, -2, 1});
const IntPoly kQuartic = P({2, 0, 0, -2, 1});
const IntPoly kCubic = P({1, 0, -3, 2});

// Survivors of x^2+1 on [3, 10^4] at depth 10, from tests/fixture_gen.cpp.
const std::set<std::uint64_t> kFrozenSurvivors = {3, 8147};

Outcome c01() {
  const std::vector<std::pair<unsigned long, long>> want = {{5, 1}, {8, 5}, {17, 13}, {32, 677}};
  long bad = 0;
  for (unsigned n = 2; n <= 5; ++n) {
    const ResDecomp r = res_decompose(kQuad, n);
    const auto [nu, u] = want[n - 2];
    const BigInt direct = pow(BigInt(2), 1ul << n) * iterate(kQuad, n)(BigInt(0));
    if (r.nu != nu || r.u != u || pow(BigInt(2), r.nu) * r.u != direct) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " mismatches in n = 2..5"};
}

Outcome c02() {
  long violations = 0, confirmed = 0;
  for (const IntPoly& f : {kQuad, kShiftedQuad, kQuartic}) {
    const modp::StabilityContext ctx(f);
    std::vector<IntPoly> its;
    for (unsigned n = 1; n <= 4; ++n) its.push_back(iterate(f, n));
    for (std::uint64_t p : primes_in(3, 499)) {
      if (ctx.bad_reduction(p)) continue;
      bool all = true;
      for (const auto& g : its) all = all && modp::rabin_irreducible(modp::reduce_mod_p(g, p).poly);
      if (!all) continue;
      ++confirmed;
      const auto chars = modp::iter_resultant_chars(ctx, p, 4);
      const int want = modp::required_sign(f.degree(), p);
      for (unsigned n = 2; n <= 4; ++n)
        if (chars.at(n) != want) ++violations;
    }
  }
  return {violations == 0 && confirmed > 0,
          std::to_string(violations) + " violations over " + std::to_string(confirmed) + " Rabin-confirmed primes"};
}

Outcome c03() {
  ScanConfig cfg;
  cfg.poly = kQuad;
  cfg.q_lo = 3;
  cfg.q_hi = 10000;
  cfg.depth = 10;
  std::string outputs[2];
  std::set<std::uint64_t> surv[2];
  const unsigned threads[2] = {1, 8};
  for (int i = 0; i < 2; ++i) {
    cfg.threads = threads[i];
    std::ostringstream out;
    run_scan(cfg, [&](const modp::StabilityVerdict& v) {
      out << record_json(v, cfg.depth).dump() << '\n';
      if (v.survived()) surv[i].insert(v.p);
    });
    outputs[i] = out.str();
  }
  const bool identical = outputs[0] == outputs[1];
  const bool ok = identical && surv[0].count(3) && surv[0] == kFrozenSurvivors;
  return {ok, "survivors " + std::to_string(surv[0].size()) + " (fixture " + std::to_string(kFrozenSurvivors.size()) +
                  "), JSONL identical across threads: " + (identical ? "yes" : "no")};
}

Outcome c04() {
  long bad = 0;
  const auto w2 = selberg_weights_exact(2);
  const auto w3 = selberg_weights_exact(3);
  const std::map<unsigned long, BigRat> want2 = {{1, 1}, {2, -1}};
  const std::map<unsigned long, BigRat> want3 = {
      {1, 1}, {2, make_rat(-24, 25)}, {3, make_rat(-21, 25)}, {6, make_rat(24, 25)}};
  if (w2.combined != want2) ++bad;
  if (w3.combined != want3) ++bad;
  for (unsigned long z : {2ul, 3ul, 10ul, 30ul}) {
    const auto W = selberg_weights_exact(z);
    for (unsigned long q = 1; q <= 100000; ++q)
      if (sieve_indicator_sum(q, W) != inner_square(q, W)) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " mismatches"};
}

Outcome c05() {
  const WindowSets ws = build_window_sets(kQuartic, 2, 4);
  const SResult a = compute_S(kQuartic, 1000, 2000, ws, SumMode::Direct);
  const SResult b = compute_S(kQuartic, 1000, 2000, ws, SumMode::Flipped);
  long bad = 0;
  for (const auto& [p, v] : a.per_prime) {
    auto it = b.per_prime.find(p);
    if (it == b.per_prime.end() || it->second != v) ++bad;
  }
  const bool ok = bad == 0 && a.per_prime.size() == b.per_prime.size() && a.S == b.S && !a.per_prime.empty();
  return {ok, std::to_string(bad) + " termwise mismatches over " + std::to_string(a.per_prime.size()) +
                  " primes, S = " + to_string(a.S)};
}

Outcome c06() {
  bool ok = true;
  std::string detail;
  for (auto [lo, hi] : {std::pair<std::uint64_t, std::uint64_t>{1000, 2000}, {10000, 20000}}) {
    const BoundCheckReport r = bound_check(kQuartic, lo, hi, 2, 4);
    ok = ok && r.holds;
    detail += "[" + std::to_string(lo) + "," + std::to_string(hi) + "] " + to_string(r.lhs) + " <= " +
              to_string(r.rhs) + "; ";
  }
  return {ok, detail + "(P_char t^2 <= 64 S)"};
}

Outcome c07() {
  long bad = 0;
  for (auto [m, n] : {std::pair{2u, 3u}, std::pair{2u, 4u}, std::pair{3u, 4u}}) {
    const auto s = res_product_sides(kCubic, m, n);
    if (s.lhs != s.rhs) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of 3 pairs differ"};
}

Outcome c08() {
  std::vector<std::string> bad;
  const ClassInfo a = classify(kQuad);
  if (!(a.in_P1() && a.in_P2 == Membership::No && a.in_P3 == Membership::No && a.gamma == BigRat(0)))
    bad.push_back("x^2+1");

  const ClassInfo b = classify(kQuartic);
  bool quartic_ok = b.in_P1() && b.in_P3 == Membership::Yes && b.gamma == make_rat(3, 2) && b.gamma_preperiodic;
  if (quartic_ok) {
    const auto* np = std::get_if<NotPreperiodic>(&b.gamma_preperiodic->status);
    const auto* ve = np ? std::get_if<ValuationEscape>(&np->certificate) : nullptr;
    const auto* zp = std::get_if<Preperiodic>(&b.zero_preperiodic.status);
    quartic_ok = ve && ve->step == 1 && zp && zp->cycle_length == 1 && zp->orbit.back() == 2 &&
                 kQuartic(BigInt(2)) == 2;
  }
  if (!quartic_ok) bad.push_back("x^4-2x^3+2");

  const ClassInfo c = classify(kCubic);
  if (!(c.in_P2 == Membership::Yes && !c.in_P1() && c.gamma == BigRat(1))) bad.push_back("2x^3-3x^2+1");

  std::string detail = bad.empty() ? "all fixtures match" : "mismatch:";
  for (const auto& s : bad) detail += " " + s;
  return {bad.empty(), detail};
}

Outcome c09() {
  const auto a = find_square_products(kQuad, 3, 6);
  const auto b = find_square_products(kQuartic, 2, 4);
  return {a.empty() && b.empty(), std::to_string(a.size() + b.size()) + " square products found"};
}

Outcome c10() {
  long violations = 0;
  double worst = 0;
  for (unsigned long v = 3; v <= 2001; v += 2) {
    if (is_perfect_square(BigInt(v))) continue;
    const double env = pv_envelope(v);
    for (unsigned long e = 1; e <= 10; ++e) {
      const long m = pv_progression_max(e, 100000, v);
      worst = std::max(worst, m / env);
      if (m > env) ++violations;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations, max ratio " + std::to_string(worst)};
}

// Checked exactly as stated: remainder of f^(n) by f^(m) against f^(n)(0).
Outcome c11() {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> coeff(-3, 3);
  long mismatches = 0, cases = 0, alt_holds = 0;
  for (int i = 0; i < 20; ++i) {
    const long d = 2 + i % 2;
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = coeff(rng);
    while (c.back() == 0) c.back() = coeff(rng);
    const IntPoly f(std::move(c));
    std::vector<IntPoly> its;
    for (unsigned n = 1; n <= 5; ++n) its.push_back(iterate(f, n));
    for (unsigned n = 2; n <= 5; ++n)
      for (unsigned m = 1; m < n; ++m) {
        ++cases;
        const RatPoly r = divide_with_remainder(its[n - 1], its[m - 1]).remainder;
        const BigRat stated(its[n - 1](BigInt(0)));
        const BigRat shifted(its[n - m - 1](BigInt(0)));
        if (r.degree() > 0) {
          ++mismatches;
          continue;
        }
        const BigRat got = r.is_zero() ? BigRat(0) : r.leading();
        if (got != stated) ++mismatches;
        if (got == shifted) ++alt_holds;
      }
  }
  return {mismatches == 0, std::to_string(mismatches) + "/" + std::to_string(cases) +
                               " remainders differ from f^(n)(0); remainder equals f^(n-m)(0) in " +
                               std::to_string(alt_holds) + "/" + std::to_string(cases)};
}

const std::vector<Criterion> kCriteria = {
    {"c01", "resultant decomposition table", 1, c01},
    {"c02", "character sign uniformity on Rabin-confirmed primes", 30, c02},
    {"c03", "survivor fixture and thread determinism", 60, c03},
    {"c04", "Selberg weights and quadratic-form identity", 30, c04},
    {"c05", "direct and flipped S agree termwise", 60, c05},
    {"c06", "bound P_char <= 64 S / t^2", 300, c06},
    {"c07", "product formula for 2x^3-3x^2+1", 10, c07},
    {"c08", "classification fixtures", 1, c08},
    {"c09", "no square products", 60, c09},
    {"c10", "progression sums under sqrt(v)(log v + 2)", 300, c10},
    {"c11", "remainder of f^(n) by f^(m) is f^(n)(0)", 30, c11},
};

bool run(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= c.limit_s;
  const bool pass = o.ok && in_time;
  std::printf("%s %s %s: %s [%.2fs / %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
              o.detail.c_str(), secs, c.limit_s, in_time ? "" : ", over time limit");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> wanted(argv + 1, argv + argc);
  bool all = true;
  std::size_t ran = 0;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    ++ran;
    all = run(c) && all;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no matching criteria\n");
    return 2;
  }
  return all ? 0 : 1;
}
