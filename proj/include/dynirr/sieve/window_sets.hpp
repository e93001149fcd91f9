#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "dynirr/exactalg/res_decomp.hpp"

namespace dynirr {

/// Limit on d^(N+t) for window construction.
inline constexpr std::size_t kDefaultWindowBudget = std::size_t{1} << 16;

struct WindowSets {
  unsigned N_param = 0;
  unsigned t = 0;
  std::vector<ResDecomp> decomp;  // n = N_param .. N_param + t
  std::vector<unsigned> N_set;    // common (u mod 4, nu mod 2)
  std::vector<unsigned> M_set;    // common sign of u within N_set

  const ResDecomp& at(unsigned n) const { return decomp.at(n - N_param); }
};

namespace detail {

/// Class index 2 [u = 3 mod 4] + [nu odd], in [0, 4).
inline unsigned residue_class(const ResDecomp& r) {
  return 2u * (mod_ui(r.u, 4) == 3 ? 1u : 0u) + static_cast<unsigned>(r.nu & 1);
}

}  // namespace detail

/// Decomposes f_d Res(f^(n), f') for n in [N_param, N_param + t], keeps the
/// largest class of (u mod 4, nu mod 2) (lowest index on ties) and then the
/// larger sign half of it (positive on ties).
inline WindowSets build_window_sets(const IntPoly& f, unsigned N_param, unsigned t,
                                    std::size_t budget = kDefaultWindowBudget) {
  if (N_param < 2) throw Error(ErrorCode::InvalidArgument, "N_param must be >= 2");
  if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "window sets need deg f >= 2");
  if (!checked_power(static_cast<std::size_t>(f.degree()), N_param + t, budget))
    throw Error(ErrorCode::BudgetExceeded, "d^(N+t) exceeds window budget " + std::to_string(budget));

  WindowSets w;
  w.N_param = N_param;
  w.t = t;
  std::array<std::vector<unsigned>, 4> classes;
  for (unsigned n = N_param; n <= N_param + t; ++n) {
    w.decomp.push_back(res_decompose(f, n));
    classes[detail::residue_class(w.decomp.back())].push_back(n);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < 4; ++c)
    if (classes[c].size() > classes[best].size()) best = c;
  w.N_set = classes[best];

  std::vector<unsigned> pos, neg;
  for (unsigned n : w.N_set) (w.at(n).u > 0 ? pos : neg).push_back(n);
  w.M_set = pos.size() >= neg.size() ? pos : neg;

  if (4 * w.N_set.size() < t || 8 * w.M_set.size() < t || 2 * w.M_set.size() < w.N_set.size())
    throw std::logic_error("pigeonhole bound violated");
  return w;
}

/// (-1)^(((u_r+u_s-2)/2)((m-1)/2) + (nu_r+nu_s)(m^2-1)/8) == 1 for all r, s in N_set.
inline bool parity_identity_holds(const WindowSets& w, unsigned long m) {
  if (m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "parity identity needs odd m");
  const unsigned long a = ((m - 1) / 2) & 1;
  const unsigned long b = ((m * m - 1) / 8) & 1;
  for (unsigned r : w.N_set)
    for (unsigned s : w.N_set) {
      const BigInt sum = w.at(r).u + w.at(s).u - 2;
      if (mod_ui(sum, 2) != 0) return false;
      const unsigned long half = mod_ui(BigInt(sum / 2), 2);
      const unsigned long nu = (w.at(r).nu + w.at(s).nu) & 1;
      if (((half * a) + (nu * b)) & 1) return false;
    }
  return true;
}

}  // namespace dynirr
