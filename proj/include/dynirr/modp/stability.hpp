#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dynirr/exactalg/resultant.hpp"
#include "dynirr/modp/rabin.hpp"

namespace dynirr::modp {

/// Legendre symbols of f_d * Res(f^(n), f') mod p for n = first_n .. first_n + size - 1.
struct CharSequence {
  unsigned first_n = 2;
  std::vector<int> values;

  int at(unsigned n) const { return values.at(n - first_n); }
  unsigned last_n() const { return first_n + static_cast<unsigned>(values.size()) - 1; }
};

/// Per-polynomial data shared by every prime of a scan.
struct StabilityContext {
  IntPoly f;
  IntPoly fprime;
  long d = 0;
  BigInt disc_num;
  BigInt disc_den;

  explicit StabilityContext(IntPoly poly) : f(std::move(poly)) {
    if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "stability needs deg f >= 2");
    d = f.degree();
    fprime = f.derivative();
    const BigRat disc = discriminant(f);
    disc_num = disc.get_num();
    disc_den = disc.get_den();
  }

  /// p = 2, p | f_d * lc(f'), or Disc(f) = 0 mod p.
  bool bad_reduction(u64 p) const {
    if (p == 2) return true;
    if (reduce(f.leading(), p) == 0 || reduce(fprime.leading(), p) == 0) return true;
    return reduce(disc_num, p) == 0;
  }
};

namespace detail {

/// Walks the critical orbit y_n = f(y_{n-1}) in F_p[X]/(f') and yields the
/// character of level n on each call.
class CharacterWalk {
 public:
  CharacterWalk(const StabilityContext& ctx, u64 p)
      : p_(p),
        fbar_(reduce_mod_p(ctx.f, p).poly),
        g_(reduce_mod_p(ctx.fprime, p).poly),
        ring_(g_),
        lead_(reduce(ctx.f.leading(), p)),
        k_(ctx.d - 1),
        d_(static_cast<u64>(ctx.d)),
        y_(ring_.reduce(ModPoly::x(p))) {}

  /// Advances to the next level and returns its character; the first call is level 1.
  int next() {
    ModPoly acc(p_);
    for (std::size_t i = fbar_.size(); i-- > 0;) acc = ring_.mul(acc, y_) + ModPoly::constant(p_, fbar_[i]);
    y_ = std::move(acc);
    ++n_;
    dn_mod_ = n_ == 1 ? d_ % (p_ - 1) : mul_mod(dn_mod_, d_ % (p_ - 1), p_ - 1);

    // Res(F, g) with F = y mod g, deg F = d^n:
    //   (-1)^(d^n k) lc(g)^(d^n - deg y) Res(g, y).
    u64 r = resultant(g_, y_);
    if (r == 0) return 0;
    if ((d_ & 1) && (k_ & 1)) r = p_ - r;  // d^n k odd
    const u64 e = (dn_mod_ + (p_ - 1) - static_cast<u64>(y_.degree()) % (p_ - 1)) % (p_ - 1);
    r = mul_mod(r, pow_mod(g_.leading(), e, p_), p_);
    return legendre(mul_mod(lead_, r, p_), p_);
  }

  unsigned level() const { return n_; }

 private:
  u64 p_;
  ModPoly fbar_;
  ModPoly g_;
  Modulus ring_;
  u64 lead_;
  long k_;
  u64 d_;
  ModPoly y_;
  unsigned n_ = 0;
  u64 dn_mod_ = 1;  // d^n mod (p - 1)
};

inline void require_good(const StabilityContext& ctx, u64 p) {
  if (p == 2 || reduce(ctx.f.leading(), p) == 0 || reduce(ctx.fprime.leading(), p) == 0)
    throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides 2 f_d lc(f')");
}

}  // namespace detail

inline CharSequence iter_resultant_chars(const StabilityContext& ctx, u64 p, unsigned n_max) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
  detail::require_good(ctx, p);
  detail::CharacterWalk walk(ctx, p);
  walk.next();
  CharSequence out;
  for (unsigned n = 2; n <= n_max; ++n) out.values.push_back(walk.next());
  return out;
}

inline CharSequence iter_resultant_chars(const IntPoly& f, u64 p, unsigned n_max) {
  return iter_resultant_chars(StabilityContext(f), p, n_max);
}

enum class EliminationReason { DiscSquare, CharacterViolation, SharedRoot, RabinReducible };

inline std::string to_string(EliminationReason r) {
  switch (r) {
    case EliminationReason::DiscSquare: return "disc_square";
    case EliminationReason::CharacterViolation: return "character_violation";
    case EliminationReason::SharedRoot: return "shared_root";
    case EliminationReason::RabinReducible: return "rabin_reducible";
  }
  return "unknown";
}

struct Eliminated {
  unsigned at_n = 1;
  EliminationReason reason = EliminationReason::DiscSquare;
  bool operator==(const Eliminated&) const = default;
};

struct SurvivedToDepth {
  unsigned n_max = 0;
  bool operator==(const SurvivedToDepth&) const = default;
};

struct StabilityVerdict {
  u64 p = 0;
  bool bad_reduction = false;
  std::optional<std::variant<Eliminated, SurvivedToDepth>> outcome;  // empty iff bad_reduction
  unsigned rabin_depth = 0;  // deepest level whose iterate Rabin confirmed irreducible

  bool survived() const { return outcome && std::holds_alternative<SurvivedToDepth>(*outcome); }
  bool eliminated() const { return outcome && std::holds_alternative<Eliminated>(*outcome); }
  const Eliminated& elimination() const { return std::get<Eliminated>(*outcome); }
};

/// For d even k = d - 1 is odd; for d odd (n - 1)k + 1 is odd. Either way the
/// power of f_d in the paired product has the parity of f_d itself.
inline bool parity_bridge(long d, unsigned n) {
  const long k = d - 1;
  return d % 2 == 0 ? (k & 1) == 1 : ((static_cast<long>(n - 1) * k + 1) & 1) == 1;
}

/// The constant value every character must take on a stable prime.
inline int required_sign(long d, u64 p) {
  if (d % 2 == 0) return -1;
  return ((d - 1) / 2) % 2 == 0 ? 1 : legendre(p - 1, p);
}

/// Depth-limited stability evidence for one prime. Checks, in order: the
/// discriminant square class, Rabin on f mod p, then for n = 2..depth the
/// critical-orbit character, followed by Rabin on f^(n) mod p while d^n fits
/// under rabin_cap.
inline StabilityVerdict stability_scan_single(const StabilityContext& ctx, u64 p, unsigned depth,
                                              std::size_t rabin_cap = kDefaultRabinCap) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  StabilityVerdict v;
  v.p = p;
  if (ctx.bad_reduction(p)) {
    v.bad_reduction = true;
    return v;
  }
  auto eliminate = [&](unsigned n, EliminationReason why) {
    v.outcome = Eliminated{n, why};
    return v;
  };

  const long d = ctx.d;
  const u64 disc = mul_mod(reduce(ctx.disc_num, p), inv_mod(reduce(ctx.disc_den, p), p), p);
  const int disc_sym = legendre(disc, p);
  if ((d % 2 == 0 && disc_sym == 1) || (d % 2 == 1 && disc_sym == -1))
    return eliminate(1, EliminationReason::DiscSquare);

  const ModPoly fbar = reduce_mod_p(ctx.f, p).poly;
  ModPoly expanded = fbar;
  std::size_t dn = static_cast<std::size_t>(d);
  if (dn <= rabin_cap) {
    if (!rabin_irreducible(fbar, rabin_cap)) return eliminate(1, EliminationReason::RabinReducible);
    v.rabin_depth = 1;
  }

  const int want = required_sign(d, p);
  detail::CharacterWalk walk(ctx, p);
  walk.next();
  for (unsigned n = 2; n <= depth; ++n) {
    if (!parity_bridge(d, n)) throw std::logic_error("parity bridge violated");
    const int c = walk.next();
    if (c == 0) return eliminate(n, EliminationReason::SharedRoot);
    if (c != want) return eliminate(n, EliminationReason::CharacterViolation);
    if (dn <= rabin_cap / static_cast<std::size_t>(d)) {
      dn *= static_cast<std::size_t>(d);
      expanded = compose(fbar, expanded);
      if (!rabin_irreducible(expanded, rabin_cap)) return eliminate(n, EliminationReason::RabinReducible);
      v.rabin_depth = n;
    } else {
      dn = rabin_cap + 1;
    }
  }
  v.outcome = SurvivedToDepth{depth};
  return v;
}

inline StabilityVerdict stability_scan_single(const IntPoly& f, u64 p, unsigned depth,
                                              std::size_t rabin_cap = kDefaultRabinCap) {
  return stability_scan_single(StabilityContext(f), p, depth, rabin_cap);
}

}  // namespace dynirr::modp
