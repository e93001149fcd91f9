#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dynirr/dynamics/orbit.hpp"
#include "dynirr/exactalg/squarefree.hpp"

namespace dynirr {

enum class Membership { No, Yes, Undecided };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::No: return "no";
    case Membership::Yes: return "yes";
    case Membership::Undecided: return "undecided";
  }
  return "unknown";
}

/// f' = g^2 (aX + b) over Z.
struct P1Witness {
  IntPoly g;
  BigInt a;
  BigInt b;
  bool operator==(const P1Witness&) const = default;
};

struct ClassInfo {
  std::optional<P1Witness> p1;
  Membership in_P2 = Membership::No;
  Membership in_P3 = Membership::No;
  std::optional<BigRat> gamma;
  std::optional<OrbitResult> gamma_preperiodic;  // present iff gamma is
  OrbitResult zero_preperiodic;

  bool in_P1() const { return p1.has_value(); }
};

/// The witness (g, a, b) when the odd-multiplicity part of f' is linear.
inline std::optional<P1Witness> p1_witness(const IntPoly& f) {
  const IntPoly fp = f.derivative();
  const SquarefreeDecomposition sq = squarefree_decompose(fp);
  IntPoly odd = IntPoly::constant(1);
  IntPoly g = IntPoly::constant(1);
  for (const auto& [s, m] : sq.factors) {
    if (m & 1) odd = odd * s;
    for (unsigned i = 0; i < m / 2; ++i) g = g * s;
  }
  if (odd.degree() != 1) return std::nullopt;
  P1Witness w{std::move(g), sq.content * odd[1], sq.content * odd[0]};
  if (w.g * w.g * IntPoly{w.b, w.a} != fp) throw std::logic_error("P1 witness does not reassemble f'");
  return w;
}

/// f = f_d X^d + f_{d-1} X^(d-1) + f_0 with f_d, f_{d-1} nonzero.
inline bool has_p2_shape(const IntPoly& f) {
  const long d = f.degree();
  if (d < 2 || f[static_cast<std::size_t>(d - 1)] == 0) return false;
  for (long i = 1; i < d - 1; ++i)
    if (f[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

/// -f_{d-1}(d-1) / (d f_d).
inline BigRat p2_gamma(const IntPoly& f) {
  const long d = f.degree();
  return make_rat(-f[static_cast<std::size_t>(d - 1)] * (d - 1), f.leading() * d);
}

inline Membership membership(const OrbitResult& r) {
  if (r.preperiodic()) return Membership::Yes;
  if (r.not_preperiodic()) return Membership::No;
  return Membership::Undecided;
}

inline ClassInfo classify(const IntPoly& f, unsigned max_steps = kDefaultOrbitSteps) {
  if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "classify needs deg f >= 2");
  ClassInfo info;
  info.p1 = p1_witness(f);
  info.zero_preperiodic = is_preperiodic(f, BigRat(0), max_steps);
  const Membership zero = membership(info.zero_preperiodic);

  info.in_P2 = has_p2_shape(f) ? zero : Membership::No;
  info.in_P3 = info.in_P1() ? zero : Membership::No;

  if (info.p1) {
    info.gamma = make_rat(-info.p1->b, info.p1->a);
    if (info.in_P2 != Membership::No && *info.gamma != p2_gamma(f))
      throw std::logic_error("P1 and P2 critical points disagree");
  } else if (info.in_P2 == Membership::Yes) {
    info.gamma = p2_gamma(f);
  }
  if (info.gamma) info.gamma_preperiodic = is_preperiodic(f, *info.gamma, max_steps);
  return info;
}

}  // namespace dynirr
