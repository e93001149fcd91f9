#pragma once

#include <vector>

#include "dynirr/exactalg/division.hpp"

namespace dynirr {

struct SquarefreeFactor {
  IntPoly factor;  // primitive, squarefree, positive leading coefficient
  unsigned multiplicity = 0;
  bool operator==(const SquarefreeFactor&) const = default;
};

struct SquarefreeDecomposition {
  BigInt content;
  std::vector<SquarefreeFactor> factors;  // ascending multiplicity

  IntPoly reassemble() const {
    IntPoly r = IntPoly::constant(content);
    for (const auto& [s, m] : factors)
      for (unsigned i = 0; i < m; ++i) r = r * s;
    return r;
  }
};

/// Yun's algorithm on the primitive part. All divisions are exact in Z[X]
/// because every divisor is a primitive gcd.
inline SquarefreeDecomposition squarefree_decompose(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decompose of zero");
  SquarefreeDecomposition out;
  out.content = content(f);
  IntPoly pf = primitive_part(f);
  if (pf.degree() == 0) return out;

  const IntPoly a0 = gcd(pf, pf.derivative());
  IntPoly b = exact_quotient(pf, a0);
  IntPoly c = exact_quotient(pf.derivative(), a0);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.push_back({std::move(a), i});
  }
  return out;
}

}  // namespace dynirr
