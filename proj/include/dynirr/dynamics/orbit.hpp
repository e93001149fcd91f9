#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dynirr/exactalg/poly.hpp"

namespace dynirr {

struct Preperiodic {
  unsigned tail_length = 0;
  unsigned cycle_length = 0;
  std::vector<BigRat> orbit;  // x0, f(x0), ... pairwise distinct
  bool operator==(const Preperiodic&) const = default;
};

struct RealEscape {
  unsigned step = 0;
  bool operator==(const RealEscape&) const = default;
};

struct ValuationEscape {
  BigInt prime;
  unsigned step = 0;
  bool operator==(const ValuationEscape&) const = default;
};

struct NotPreperiodic {
  std::variant<RealEscape, ValuationEscape> certificate;
  bool operator==(const NotPreperiodic&) const = default;
};

struct Undecided {
  unsigned steps_taken = 0;
  bool operator==(const Undecided&) const = default;
};

struct OrbitResult {
  std::variant<Preperiodic, NotPreperiodic, Undecided> status;

  bool preperiodic() const { return std::holds_alternative<Preperiodic>(status); }
  bool not_preperiodic() const { return std::holds_alternative<NotPreperiodic>(status); }
  bool undecided() const { return std::holds_alternative<Undecided>(status); }
  bool operator==(const OrbitResult&) const = default;
};

inline constexpr unsigned kDefaultOrbitSteps = 10000;

/// Orbit values whose numerator or denominator exceed this many bits end the
/// search as Undecided.
inline constexpr std::size_t kOrbitBitLimit = std::size_t{1} << 16;

/// |x| >= B implies |f(x)| >= 2|x|.
inline BigRat escape_radius(const IntPoly& f) {
  BigInt s = 2;
  for (long i = 0; i < f.degree(); ++i) s += abs(f[static_cast<std::size_t>(i)]);
  BigRat b = make_rat(s, abs(f.leading()));
  return b < 1 ? BigRat(1) : b;
}

namespace detail {

/// A prime p with v_p(x) < 0 and p not dividing f_d, if one is found.
inline std::optional<BigInt> escaping_prime(const BigRat& x, const BigInt& lead) {
  BigInt den = x.get_den();
  if (den == 1) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), lead.get_mpz_t());
  while (g > 1) {
    den = exact_div(den, g);
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  if (den == 1) return std::nullopt;
  return find_prime_factor(den);
}

}  // namespace detail

/// Decides whether x0 has a finite forward orbit under f, using a repeated
/// value, real escape past escape_radius(f), or a prime of the denominator
/// not dividing f_d. Escape certificates are only checked from step 1.
inline OrbitResult is_preperiodic(const IntPoly& f, const BigRat& x0, unsigned max_steps = kDefaultOrbitSteps) {
  if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "is_preperiodic needs deg f >= 2");
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be >= 1");
  const BigRat B = escape_radius(f);
  const long d = f.degree();

  std::vector<BigRat> orbit{x0};
  std::map<BigRat, unsigned> seen{{x0, 0}};
  BigRat x = x0;
  for (unsigned step = 1; step <= max_steps; ++step) {
    x = f(x);
    if (auto it = seen.find(x); it != seen.end())
      return {Preperiodic{it->second, step - it->second, std::move(orbit)}};

    if (abs(x) >= B) {
      if (abs(f(x)) < 2 * abs(x)) throw std::logic_error("real escape certificate failed");
      return {NotPreperiodic{RealEscape{step}}};
    }
    if (auto p = detail::escaping_prime(x, f.leading())) {
      if (valuation(f(x), *p) != d * valuation(x, *p)) throw std::logic_error("valuation certificate failed");
      return {NotPreperiodic{ValuationEscape{*p, step}}};
    }
    if (mpz_sizeinbase(x.get_num_mpz_t(), 2) > kOrbitBitLimit || mpz_sizeinbase(x.get_den_mpz_t(), 2) > kOrbitBitLimit)
      return {Undecided{step}};
    seen.emplace(x, step);
    orbit.push_back(x);
  }
  return {Undecided{max_steps}};
}

}  // namespace dynirr
