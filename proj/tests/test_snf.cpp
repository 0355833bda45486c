#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "symq/oracles.hpp"
#include "symq/snf.hpp"
#include "symq/words.hpp"

using namespace symq;

namespace {

IntMat mat(int rows, int cols, std::initializer_list<long> entries) {
  IntMat m(rows, cols);
  int k = 0;
  for (long e : entries) m.a[k++] = e;
  return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  CHECK(smith_normal_form(mat(2, 2, {2, 0, 0, 2})).diagonal ==
        std::vector<mpz_class>{2, 2});
  CHECK(smith_normal_form(mat(1, 2, {1, 1})).diagonal ==
        std::vector<mpz_class>{1});
  CHECK(smith_normal_form(mat(2, 2, {2, 4, 0, 6})).diagonal ==
        std::vector<mpz_class>{2, 6});
  CHECK(smith_normal_form(IntMat(3, 2)).rank == 0);
}

TEST_CASE("smith normal form matches the determinant-divisor oracle") {
  // [2,4;0,6]: gcd of entries 2, determinant 12 → factors (2, 6).
  CHECK(invariant_factors_by_minors(mat(2, 2, {2, 4, 0, 6})) ==
        std::vector<mpz_class>{2, 6});

  std::mt19937 rng(20250810);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat m(4, 4);
    for (auto& e : m.a) e = static_cast<long>(rng() % 19) - 9;
    const auto got = smith_normal_form(m).diagonal;
    const auto want = invariant_factors_by_minors(m);
    CHECK(got == want);
  }
}

TEST_CASE("smith transforms satisfy their defining identities") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 25; ++trial) {
    IntMat m(3 + static_cast<int>(rng() % 3), 3 + static_cast<int>(rng() % 3));
    for (auto& e : m.a) e = static_cast<long>(rng() % 15) - 7;

    const SmithResult s = smith_normal_form(m, true, true);
    CHECK(s.v.multiply(s.v_inv) == IntMat::identity(m.cols));

    // Columns of V beyond the rank span the kernel.
    const IntMat mv = m.multiply(s.v);
    for (int j = s.rank; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i) CHECK(mv.at(i, j) == 0);

    // Divisibility chain.
    for (std::size_t i = 1; i < s.diagonal.size(); ++i)
      CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  }
}

TEST_CASE("relation matrices") {
  CHECK(relation_matrix(parse_presentation("gens: a\nrel: a a a\n")) ==
        mat(1, 1, {3}));
  CHECK(relation_matrix(
            parse_presentation("gens: a b\nrel: a b a^-1 b^-1\n")) ==
        mat(1, 2, {0, 0}));
  CHECK(relation_matrix(parse_presentation("gens: s0 s1\nrel: s1 s0\n")) ==
        mat(1, 2, {1, 1}));
}

TEST_CASE("abelian invariants of small presentations") {
  const auto z3 = abelian_invariants(parse_presentation("gens: a\nrel: a a a\n"));
  CHECK(z3.torsion == std::vector<long long>{3});
  CHECK(z3.free_rank == 0);

  const auto f2 = abelian_invariants(parse_presentation("gens: a b\n"));
  CHECK(f2.torsion.empty());
  CHECK(f2.free_rank == 2);

  const auto z = abelian_invariants(parse_presentation(
      "gens: s0 s1\nrel: s1 s0\nrel: s0 s1 s0^-1 s1^-1\n"));
  CHECK(z.torsion.empty());
  CHECK(z.free_rank == 1);
}

TEST_CASE("abelian invariants ignore relator presentation details") {
  const auto base = parse_presentation(
      "gens: a b c\nrel: a a b^-1\nrel: b c c\nrel: a b c a\n");
  const auto reference = abelian_invariants(base);

  Presentation permuted = base;
  std::swap(permuted.relators[0], permuted.relators[2]);
  CHECK(abelian_invariants(permuted) == reference);

  Presentation inverted = base;
  inverted.relators[1] = inverse_word(inverted.relators[1]);
  CHECK(abelian_invariants(inverted) == reference);

  Presentation rotated = base;
  std::rotate(rotated.relators[2].begin(), rotated.relators[2].begin() + 2,
              rotated.relators[2].end());
  CHECK(abelian_invariants(rotated) == reference);
}

TEST_CASE("generator classes in the abelianization") {
  // ⟨s0, s1 | commutator, s1 s0⟩ ≅ ℤ with s0 ↦ ±1, s1 ↦ ∓1.
  const auto ab = abelianization_with_classes(parse_presentation(
      "gens: s0 s1\nrel: s0 s1 s0^-1 s1^-1\nrel: s1 s0\n"));
  CHECK(ab.invariants.free_rank == 1);
  CHECK(ab.invariants.torsion.empty());
  REQUIRE(ab.classes.size() == 2);
  CHECK(ab.classes[0] != ab.classes[1]);
  CHECK(ab.classes[0].size() == 1);
  CHECK(ab.classes[0][0] == -ab.classes[1][0]);
  CHECK(std::abs(ab.classes[0][0]) == 1);

  // ℤ₂ × ℤ₂: all three nontrivial classes distinct.
  const auto klein = abelianization_with_classes(parse_presentation(
      "gens: a b\nrel: a a\nrel: b b\nrel: a b a^-1 b^-1\n"));
  CHECK(klein.invariants.torsion == std::vector<long long>{2, 2});
  CHECK(klein.classes[0] != klein.classes[1]);
}
