#pragma once

#include <cstdint>
#include <vector>

#include "dynirr/modp/mod_poly.hpp"

namespace dynirr::modp {

inline constexpr std::size_t kDefaultRabinCap = 4096;

/// The Frobenius map a -> a^p on F_p[X]/(f) as a D x D matrix whose row j is
/// X^(jp) mod f. One application costs D^2 multiply-adds.
class FrobeniusMatrix {
 public:
  explicit FrobeniusMatrix(const Modulus& m) : p_(m.modulus()), D_(static_cast<std::size_t>(m.degree())) {
    rows_.assign(D_ * D_, 0);
    const ModPoly xp = m.pow(ModPoly::x(p_), p_);
    ModPoly row = m.reduce(ModPoly::constant(p_, 1));
    for (std::size_t j = 0; j < D_; ++j) {
      if (j > 0) row = m.mul(row, xp);
      for (std::size_t c = 0; c < row.size(); ++c) rows_[j * D_ + c] = static_cast<std::uint32_t>(row[c]);
    }
  }

  ModPoly apply(const ModPoly& a) const {
    std::vector<u128> acc(D_, 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const u64 v = a[j];
      if (v == 0) continue;
      const std::uint32_t* row = rows_.data() + j * D_;
      for (std::size_t c = 0; c < D_; ++c) acc[c] += static_cast<u128>(v * row[c]);
    }
    std::vector<u64> r(D_);
    for (std::size_t c = 0; c < D_; ++c) r[c] = static_cast<u64>(acc[c] % p_);
    return ModPoly(p_, std::move(r));
  }

 private:
  u64 p_;
  std::size_t D_;
  std::vector<std::uint32_t> rows_;
};

namespace detail {

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      r.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace detail

/// Rabin's criterion: f of degree D is irreducible over F_p iff
/// X^(p^D) = X mod f and gcd(X^(p^(D/r)) - X, f) = 1 for every prime r | D.
inline bool rabin_irreducible(const ModPoly& f, std::size_t degree_cap = kDefaultRabinCap) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "rabin_irreducible needs deg >= 1");
  const std::size_t D = static_cast<std::size_t>(f.degree());
  if (D > degree_cap)
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree " + std::to_string(D) + " exceeds Rabin cap " + std::to_string(degree_cap));
  if (D == 1) return true;

  const u64 p = f.modulus();
  const Modulus m(f);
  const FrobeniusMatrix frob(m);
  const ModPoly X = ModPoly::x(p);
  const auto rs = detail::prime_divisors(D);

  ModPoly cur = X;  // X^(p^s)
  for (std::size_t s = 1; s <= D; ++s) {
    cur = frob.apply(cur);
    for (std::size_t r : rs)
      if (s == D / r && gcd(cur - X, m.monic()).degree() != 0) return false;
  }
  return cur == X;
}

}  // namespace dynirr::modp
