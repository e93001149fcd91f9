#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dynirr/dynamics/classify.hpp"
#include "dynirr/exactalg/res_decomp.hpp"

namespace dynirr {

struct EisensteinMember {
  IntPoly f;
  std::optional<BigInt> witness;
};

/// f = aX^d - acX^(d-1) + c, for which f^(n)(0) = c for all n >= 1. The witness
/// is the smallest prime p with p | c, p^2 not dividing c and p not dividing a;
/// prime factors of c beyond 2^20 are only found when the remaining cofactor is prime.
inline EisensteinMember eisenstein_member(const BigInt& a, const BigInt& c, unsigned d) {
  if (a == 0 || c == 0 || d < 2) throw Error(ErrorCode::InvalidArgument, "eisenstein_member needs a, c != 0 and d >= 2");
  std::vector<BigInt> coeffs(d + 1, 0);
  coeffs[d] = a;
  coeffs[d - 1] = -a * c;
  coeffs[0] = c;
  EisensteinMember out{IntPoly(std::move(coeffs)), std::nullopt};

  BigInt rest = abs(c);
  while (rest > 1) {
    auto p = find_prime_factor(rest);
    if (!p) break;
    const unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p->get_mpz_t());
    if (e == 1 && !mpz_divisible_p(a.get_mpz_t(), p->get_mpz_t())) {
      out.witness = *p;
      break;
    }
  }
  return out;
}

/// Pairs m < n in [n_lo, n_hi] with |u_m u_n| a perfect square.
inline std::vector<std::pair<unsigned, unsigned>> find_square_products(const IntPoly& f, unsigned n_lo,
                                                                       unsigned n_hi) {
  if (n_lo < 2) throw Error(ErrorCode::InvalidArgument, "find_square_products needs n_lo >= 2");
  std::vector<std::pair<unsigned, unsigned>> out;
  if (n_hi <= n_lo) return out;
  std::vector<BigInt> u;
  for (unsigned n = n_lo; n <= n_hi; ++n) u.push_back(abs(res_decompose(f, n).u));
  for (unsigned i = 0; i < u.size(); ++i)
    for (unsigned j = i + 1; j < u.size(); ++j)
      if (is_perfect_square(u[i] * u[j])) out.emplace_back(n_lo + i, n_lo + j);
  return out;
}

struct ProductFormulaSides {
  BigRat lhs;  // Res(f^(m) f^(n), f')
  BigRat rhs;
};

/// Both sides of
///   Res(f^(m) f^(n), f') = (-1)^((d-1)(d^m+d^n)) (d f_d)^(d^m+d^n)
///                          (f^(m)(0) f^(n)(0))^(d-2) f^(m)(g) f^(n)(g)
/// for f in P2 with critical point g. Throws ClassMismatch otherwise.
inline ProductFormulaSides res_product_sides(const IntPoly& f, unsigned m, unsigned n,
                                             std::size_t coeff_cap = kDefaultIterateCap) {
  if (m < 2 || n <= m) throw Error(ErrorCode::InvalidArgument, "need 2 <= m < n");
  if (!has_p2_shape(f) || !is_preperiodic(f, BigRat(0)).preperiodic())
    throw Error(ErrorCode::ClassMismatch, to_string(f) + " is not in P2");
  const long d = f.degree();
  const IntPoly fm = iterate(f, m, coeff_cap);
  const IntPoly fn = iterate(f, n, coeff_cap);

  ProductFormulaSides s;
  s.lhs = BigRat(resultant(fm * fn, f.derivative()));

  const BigInt dm = pow(BigInt(d), m);
  const BigInt e = dm + pow(BigInt(d), n);
  const BigRat gamma = p2_gamma(f);
  BigRat rhs = BigRat(pow(BigInt(BigInt(d) * f.leading()), e.get_ui()));
  rhs *= pow(BigRat(fm(BigInt(0)) * fn(BigInt(0))), static_cast<unsigned long>(d - 2));
  rhs *= fm(gamma) * fn(gamma);
  if (d % 2 == 0 && mpz_odd_p(e.get_mpz_t())) rhs = -rhs;
  s.rhs = rhs;
  return s;
}

inline bool verify_res_product_formula(const IntPoly& f, unsigned m, unsigned n) {
  const auto s = res_product_sides(f, m, n);
  return s.lhs == s.rhs;
}

}  // namespace dynirr
