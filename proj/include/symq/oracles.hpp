#ifndef SYMQ_ORACLES_HPP
#define SYMQ_ORACLES_HPP

#include "symq/snf.hpp"

namespace symq {

/// Determinant of a square IntMat by Laplace expansion. Exponential;
/// intended for the small matrices the oracles run on.
mpz_class naive_determinant(const IntMat& m);

/// gcd of all k×k minors (0 when every minor vanishes).
mpz_class minor_gcd(const IntMat& m, int k);

/// Invariant factors through determinant divisors: dₖ/dₖ₋₁ with
/// dₖ = gcd of the k×k minors. Independent of the Smith reduction path;
/// used only to cross-check it.
std::vector<mpz_class> invariant_factors_by_minors(const IntMat& m);

}  // namespace symq

#endif  // SYMQ_ORACLES_HPP
