#pragma once

#include <utility>
#include <vector>

#include "dynirr/exactalg/resultant.hpp"

namespace dynirr {

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};

/// A = B * quotient + remainder over Q with deg remainder < deg B.
inline RatDivision divide_with_remainder(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "divide_with_remainder by zero");
  PseudoDivision pd = pseudo_divide(A, B);
  const BigInt scale = pow(B.leading(), pd.exponent);
  auto rescale = [&](const IntPoly& p) {
    std::vector<BigRat> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.push_back(make_rat(c, scale));
    return RatPoly(std::move(v));
  };
  return {rescale(pd.quotient), rescale(pd.remainder)};
}

/// Remainder of A by B over Q.
inline RatPoly rem(const RatPoly& A, const RatPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "rem by zero");
  if (A.degree() < B.degree()) return A;
  std::vector<BigRat> r(A.coeffs().begin(), A.coeffs().end());
  const long k = B.degree();
  const BigRat inv_lc = 1 / B.leading();
  auto b = B.coeffs();
  for (long i = A.degree(); i >= k; --i) {
    if (r[i] == 0) continue;
    const BigRat factor = r[i] * inv_lc;
    for (long j = 0; j < k; ++j) r[i - k + j] -= factor * b[j];
    r[i] = 0;
  }
  r.resize(k);
  return RatPoly(std::move(r));
}

/// Exact quotient A / B in Z[X]; throws if B does not divide A.
inline IntPoly exact_quotient(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "exact_quotient by zero");
  if (A.is_zero()) return A;
  if (A.degree() < B.degree()) throw Error(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
  const long k = B.degree();
  std::vector<BigInt> r(A.coeffs().begin(), A.coeffs().end());
  std::vector<BigInt> q(A.degree() - k + 1);
  auto b = B.coeffs();
  const BigInt& lc = B.leading();
  for (long i = A.degree(); i >= k; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t()))
      throw Error(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
    q[i - k] = exact_div(r[i], lc);
    for (long j = 0; j <= k; ++j) mpz_submul(r[i - k + j].get_mpz_t(), q[i - k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (long j = 0; j < k; ++j)
    if (r[j] != 0) throw Error(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
  return IntPoly(std::move(q));
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPoly gcd(const IntPoly& A, const IntPoly& B) {
  if (A.is_zero()) return primitive_part(B);
  if (B.is_zero()) return primitive_part(A);
  IntPoly a = primitive_part(A);
  IntPoly b = primitive_part(B);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

}  // namespace dynirr
