#pragma once

#include <utility>
#include <vector>

#include "dynirr/exactalg/poly.hpp"

namespace dynirr {

/// lc(B)^(deg A - deg B + 1) * A mod B, computed over Z.
///
/// Only the k = deg B coefficients under the current leading term are touched
/// per step; the lc scalings that the untouched tail would have received are
/// applied lazily when a coefficient first enters that window. Cost is
/// O((deg A - deg B) * deg B) coefficient operations instead of O(deg A^2).
inline IntPoly pseudo_remainder(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "pseudo_remainder by zero");
  const long m = A.degree();
  const long k = B.degree();
  if (m < k) return A;
  const BigInt& lc = B.leading();
  if (k == 0) return IntPoly();

  std::vector<BigInt> w(A.coeffs().begin(), A.coeffs().end());
  auto b = B.coeffs();
  BigInt scale = 1;  // lc^(m - i)
  BigInt top;
  for (long i = m; i >= k; --i) {
    if (i < m) w[i - k] *= scale;
    top = w[i];
    w[i] = 0;
    for (long j = 0; j < k; ++j) {
      BigInt& slot = w[i - k + j];
      slot *= lc;
      mpz_submul(slot.get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
    scale *= lc;
  }
  w.resize(k);
  return IntPoly(std::move(w));
}

struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
  unsigned long exponent = 0;  // lc(B)^exponent * A = quotient * B + remainder
};

inline PseudoDivision pseudo_divide(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "pseudo_divide by zero");
  PseudoDivision out;
  const long m = A.degree();
  const long k = B.degree();
  if (m < k) {
    out.remainder = A;
    return out;
  }
  const unsigned long delta = static_cast<unsigned long>(m - k);
  out.exponent = delta + 1;
  const BigInt& lc = B.leading();
  std::vector<BigInt> r(A.coeffs().begin(), A.coeffs().end());
  std::vector<BigInt> q(delta + 1);
  auto b = B.coeffs();
  for (long i = m; i >= k; --i) {
    const BigInt top = r[i];
    for (auto& c : q) c *= lc;
    q[i - k] += top;
    for (long j = 0; j < i; ++j) r[j] *= lc;
    r[i] = 0;
    for (long j = 0; j < k; ++j) mpz_submul(r[i - k + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(k);
  out.quotient = IntPoly(std::move(q));
  out.remainder = IntPoly(std::move(r));
  return out;
}

/// Res(g, h) = lc(g)^deg h * prod_{g(a)=0} h(a), the Sylvester-determinant
/// convention. Subresultant polynomial remainder sequence over Z.
inline BigInt resultant(IntPoly A, IntPoly B) {
  if (A.is_zero() || B.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
    std::swap(A, B);
  }
  if (B.degree() == 0) return s * pow(B.leading(), static_cast<unsigned long>(A.degree()));

  // Res(cA, B) = c^deg B * Res(A, B); contents are signed.
  const BigInt ca = content(A);
  const BigInt cb = content(B);
  A = primitive_part(A);
  B = primitive_part(B);
  const BigInt t = pow(ca, static_cast<unsigned long>(B.degree())) * pow(cb, static_cast<unsigned long>(A.degree()));

  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const unsigned long delta = static_cast<unsigned long>(A.degree() - B.degree());
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    const BigInt divisor = g * pow(h, delta);
    for (auto& c : R.raw()) c = exact_div(c, divisor);
    B = std::move(R);
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(pow(g, delta), pow(h, delta - 1));
    }
    if (B.degree() == 0) break;
  }
  const unsigned long da = static_cast<unsigned long>(A.degree());
  h = exact_div(pow(B.leading(), da), pow(h, da - 1));
  return s * t * h;
}

/// (-1)^(d(d-1)/2) * Res(f, f') / f_d.
inline BigRat discriminant(const IntPoly& f) {
  const long d = f.degree();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "discriminant needs deg f >= 2");
  BigInt r = resultant(f, f.derivative());
  if (((d * (d - 1)) / 2) & 1) r = -r;
  return make_rat(r, f.leading());
}

}  // namespace dynirr
