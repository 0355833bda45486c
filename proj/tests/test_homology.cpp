#include <doctest.h>

#include "symq/errors.hpp"
#include "symq/homology.hpp"
#include "symq/quandle.hpp"
#include "symq/symmetric.hpp"

using namespace symq;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

constexpr int kBound = 10000;

}  // namespace

TEST_CASE("boundary matrices of trivial quandles vanish") {
  const auto b2 = quandle_boundary_matrices(trivial_quandle(2));
  CHECK(b2.pair_basis.size() == 2);
  CHECK(b2.d2.is_zero());
  CHECK(b2.d3.is_zero());

  const auto b1 = quandle_boundary_matrices(trivial_quandle(1));
  CHECK(b1.pair_basis.empty());
  CHECK(b1.triple_basis.empty());
}

TEST_CASE("boundary matrices compose to zero") {
  for (const QuandleTable& q :
       {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5),
        trivial_quandle(4)}) {
    const auto b = quandle_boundary_matrices(q);
    CHECK(b.d2.multiply(b.d3).is_zero());
  }
}

TEST_CASE("basis sizes count tuples without adjacent repeats") {
  const auto b = quandle_boundary_matrices(dihedral_quandle(3));
  CHECK(b.pair_basis.size() == 6);
  CHECK(b.triple_basis.size() == 12);  // 3·2·2
  CHECK(b.d2.rows == 3);
  CHECK(b.d2.cols == 6);
  CHECK(b.d3.rows == 6);
  CHECK(b.d3.cols == 12);
}

TEST_CASE("second homology through the chain complex") {
  CHECK(h2_chain(trivial_quandle(1)) == AbelianInvariants{});
  CHECK(h2_chain(trivial_quandle(2)) == AbelianInvariants{{}, 2});
  CHECK(h2_chain(dihedral_quandle(3)) == AbelianInvariants{});

  // ℤ^(n²−n) for trivial quandles: every boundary map vanishes.
  for (int n = 1; n <= 4; ++n)
    CHECK(h2_chain(trivial_quandle(n)) == AbelianInvariants{{}, n * n - n});
}

TEST_CASE("chain homology is an isomorphism invariant") {
  for (const QuandleTable& q : {dihedral_quandle(3), dihedral_quandle(5)}) {
    std::vector<int> shift(q.size());
    for (int i = 0; i < q.size(); ++i) shift[i] = (i + 1) % q.size();
    CHECK(h2_chain(q) == h2_chain(relabel(q, perm(shift))));
  }
}

TEST_CASE("group-theoretic formula on the three-element dihedral quandle") {
  const auto r = h2_group_formula(dihedral_quandle(3), perm({0, 1, 2}), 0, kBound);
  REQUIRE(!r.bound_exceeded);
  CHECK(r.group_order == 6);
  CHECK(r.stabilizer_order == 2);
  CHECK(r.derived_order == 3);
  CHECK(r.intersection_order == 1);
  CHECK(r.invariants == AbelianInvariants{});

  const auto t1 = h2_group_formula(trivial_quandle(1), perm({0}), 0, kBound);
  REQUIRE(!t1.bound_exceeded);
  CHECK(t1.group_order == 2);
  CHECK(t1.invariants == AbelianInvariants{});

  CHECK_THROWS_AS(
      h2_group_formula(dihedral_quandle(4), perm({0, 1, 2, 3}), 0, kBound),
      NotConnectedError);
}

TEST_CASE("cross-check on connected symmetric quandles") {
  const auto r3 = h2_crosscheck(dihedral_quandle(3), perm({0, 1, 2}), kBound);
  CHECK(r3.outcome == H2CrossCheck::Outcome::Pass);
  CHECK(r3.chain == AbelianInvariants{});

  const auto t1 = h2_crosscheck(trivial_quandle(1), perm({0}), kBound);
  CHECK(t1.outcome == H2CrossCheck::Outcome::Pass);

  const auto r5 =
      h2_crosscheck(dihedral_quandle(5), perm({0, 1, 2, 3, 4}), kBound);
  CHECK(r5.outcome == H2CrossCheck::Outcome::Pass);
  for (const auto& bp : r5.per_basepoint) {
    REQUIRE(!bp.bound_exceeded);
    CHECK(bp.invariants == r5.chain);
  }
}

TEST_CASE("size limit guards the matrix budget") {
  CHECK_THROWS_AS(quandle_boundary_matrices(dihedral_quandle(9), 100),
                  SizeLimitError);
}
