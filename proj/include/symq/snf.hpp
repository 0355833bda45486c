#ifndef SYMQ_SNF_HPP
#define SYMQ_SNF_HPP

#include <gmpxx.h>

#include <vector>

#include "symq/words.hpp"

namespace symq {

/// Dense integer matrix over arbitrary-precision integers, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  bool is_zero() const;
  IntMat multiply(const IntMat& other) const;
  /// this · v for a column vector v.
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

/// U·A·V = diag(d₁, …, d_k, 0, …) with d₁ | d₂ | … and dᵢ > 0.
/// Only the column transform is tracked; V transforms generators, so it is
/// what cokernel and kernel computations need.
struct SmithResult {
  std::vector<mpz_class> diagonal;  // the nonzero invariant factors
  int rank = 0;
  IntMat v;      // filled when want_v
  IntMat v_inv;  // filled when want_v_inv
};

SmithResult smith_normal_form(IntMat m, bool want_v = false,
                              bool want_v_inv = false);

/// Finite abelian invariants: ℤ_{d₁} ⊕ … ⊕ ℤ_{d_k} ⊕ ℤ^free_rank with
/// 2 ≤ d₁ | d₂ | … | d_k.
struct AbelianInvariants {
  std::vector<long long> torsion;
  int free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& inv);

/// Exponent-sum matrix, one row per relator, one column per generator.
IntMat relation_matrix(const Presentation& p);

/// Cokernel invariants of the relation matrix.
AbelianInvariants abelian_invariants(const Presentation& p);

/// Abelianization together with the image of every generator, as a
/// canonical coordinate vector (entries for torsion factors > 1 reduced to
/// [0, dᵢ), then the free coordinates).
struct AbelianizedClasses {
  AbelianInvariants invariants;
  std::vector<std::vector<long long>> classes;  // one per generator
};

AbelianizedClasses abelianization_with_classes(const Presentation& p);

/// Invariants of the quotient of ℤ^cols(m) by the row span of m.
AbelianInvariants cokernel_invariants(const IntMat& m);

}  // namespace symq

#endif  // SYMQ_SNF_HPP
