#pragma once

#include "dynirr/exactalg/division.hpp"

namespace dynirr {

/// f_d * Res(f^(n), f') = 2^nu * u with u odd.
struct ResDecomp {
  unsigned n = 0;
  unsigned long nu = 0;
  BigInt u;
  bool operator==(const ResDecomp&) const = default;
};

/// X^(n) = f^(n)(X) reduced in Q[X]/(f'(X)); the returned polynomial has degree < deg f'.
inline RatPoly iterate_mod_derivative(const IntPoly& f, unsigned n) {
  const RatPoly fp = to_rational(f.derivative());
  RatPoly r = rem(RatPoly::x(), fp);
  for (unsigned i = 0; i < n; ++i) {
    RatPoly acc;
    for (std::size_t j = f.size(); j-- > 0;) {
      acc = rem(acc * r, fp);
      acc += RatPoly::constant(BigRat(f[j]));
    }
    r = std::move(acc);
  }
  return r;
}

/// Res(f^(n), f') without expanding f^(n): with A = f^(n) = Q f' + R,
///   Res(A, f') = (-1)^(deg A * k) lc(f')^(deg A - deg R) Res(f', R),  k = deg f'.
inline BigInt iterate_resultant(const IntPoly& f, unsigned n) {
  const long d = f.degree();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "iterate_resultant needs deg f >= 2");
  const IntPoly fp = f.derivative();
  const unsigned long k = static_cast<unsigned long>(fp.degree());
  const RatPoly r = iterate_mod_derivative(f, n);
  if (r.is_zero()) return 0;

  // deg A = d^n; only its parity and its size as an exponent matter.
  BigInt deg_a = pow(BigInt(d), n);
  const unsigned long deg_r = static_cast<unsigned long>(r.degree());
  auto [den, R] = clear_denominators(r);
  // Res(f', R/den) = Res(f', R) / den^k
  BigRat res_fp_r = make_rat(resultant(fp, R), pow(den, k));
  const BigInt exponent = deg_a - deg_r;
  BigRat lc_power(pow(fp.leading(), exponent.get_ui()));
  BigRat value = lc_power * res_fp_r;
  if (mpz_odd_p(deg_a.get_mpz_t()) && (k & 1)) value = -value;
  value.canonicalize();
  if (value.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral resultant (internal)");
  return value.get_num();
}

/// Same quantity by full expansion of f^(n) and a direct resultant.
inline BigInt iterate_resultant_expanded(const IntPoly& f, unsigned n,
                                         std::size_t coeff_cap = kDefaultIterateCap) {
  return resultant(iterate(f, n, coeff_cap), f.derivative());
}

namespace detail {
inline ResDecomp decompose(const IntPoly& f, unsigned n, const BigInt& res) {
  if (res == 0)
    throw Error(ErrorCode::ZeroResultant,
                "Res(f^(" + std::to_string(n) + "), f') = 0: f^(n) and f' share a root");
  OddPart op = odd_part(f.leading() * res);
  return ResDecomp{n, op.nu, op.u};
}
}  // namespace detail

/// (n, nu_n, u_n) via the quotient ring Q[X]/(f'); no degree cap applies.
inline ResDecomp res_decompose(const IntPoly& f, unsigned n) {
  if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "res_decompose needs deg f >= 2");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "res_decompose needs n >= 2");
  return detail::decompose(f, n, iterate_resultant(f, n));
}

/// (n, nu_n, u_n) via full expansion of f^(n).
inline ResDecomp res_decompose_expanded(const IntPoly& f, unsigned n,
                                        std::size_t coeff_cap = kDefaultIterateCap) {
  if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "res_decompose needs deg f >= 2");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "res_decompose needs n >= 2");
  return detail::decompose(f, n, iterate_resultant_expanded(f, n, coeff_cap));
}

}  // namespace dynirr
