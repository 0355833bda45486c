#include <doctest.h>

#include <algorithm>

#include "symq/associated.hpp"
#include "symq/errors.hpp"
#include "symq/group_table.hpp"
#include "symq/json_io.hpp"

using namespace symq;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

constexpr int kBound = 10000;

}  // namespace

TEST_CASE("associated group presentations") {
  const auto p1 = as_presentation(trivial_quandle(1));
  CHECK(p1.generators == std::vector<std::string>{"e0"});
  CHECK(p1.relators.empty());

  const auto p2 = as_presentation(trivial_quandle(2));
  CHECK(p2.generators.size() == 2);
  CHECK(p2.relators.size() == 2);  // the two commutators
  for (const Word& r : p2.relators) {
    const IntMat m = relation_matrix(Presentation{p2.generators, {r}});
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 0);
  }
  const auto ab2 = abelian_invariants(p2);
  CHECK(ab2.torsion.empty());
  CHECK(ab2.free_rank == 2);

  const auto ab3 = abelian_invariants(as_presentation(dihedral_quandle(3)));
  CHECK(ab3.torsion.empty());
  CHECK(ab3.free_rank == 1);
}

TEST_CASE("symmetric associated group presentations") {
  const auto kamada = symas_presentation(trivial_quandle(2), perm({1, 0}));
  const auto ab = abelian_invariants(kamada);
  CHECK(ab.torsion.empty());
  CHECK(ab.free_rank == 1);  // As(T₂, swap) ≅ ℤ

  const auto one = symas_presentation(trivial_quandle(1), perm({0}));
  REQUIRE(one.relators.size() == 1);
  CHECK(one.relators[0] == Word{Letter(0, 1), Letter(0, 1)});
  CHECK(abelian_invariants(one).torsion == std::vector<long long>{2});

  const auto r3 = symas_presentation(dihedral_quandle(3), perm({0, 1, 2}));
  const auto tc = todd_coxeter(r3, {}, kBound);
  REQUIRE(!tc.bound_exceeded);
  CHECK(tc.table.count == 6);
}

TEST_CASE("abelianization checks") {
  CHECK(asq_abelianization_check(trivial_quandle(3)).pass);
  CHECK(asq_abelianization_check(trivial_quandle(3)).invariants.free_rank == 3);
  CHECK(asq_abelianization_check(dihedral_quandle(3)).pass);
  CHECK(asq_abelianization_check(dihedral_quandle(4)).pass);
  CHECK(asq_abelianization_check(dihedral_quandle(4)).invariants.free_rank == 2);

  const auto k = symas_abelianization_check(trivial_quandle(2), perm({1, 0}));
  CHECK(k.pass);
  CHECK(k.invariants.free_rank == 1);
  CHECK(k.invariants.torsion.empty());

  const auto r3 =
      symas_abelianization_check(dihedral_quandle(3), perm({0, 1, 2}));
  CHECK(r3.pass);
  CHECK(r3.invariants.torsion == std::vector<long long>{2});
  CHECK(r3.invariants.free_rank == 0);

  const auto mixed =
      symas_abelianization_check(trivial_quandle(3), perm({1, 0, 2}));
  CHECK(mixed.pass);
  CHECK(mixed.invariants.torsion == std::vector<long long>{2});
  CHECK(mixed.invariants.free_rank == 1);  // ℤ₂ ⊕ ℤ
}

TEST_CASE("central kernel reports") {
  const auto a = central_kernel_report(trivial_quandle(2), perm({1, 0}));
  CHECK(a.kernel_rank == 1);
  CHECK(a.orbit_count == 2);
  CHECK(a.lambda1_count == 0);
  CHECK(a.lambda2_count == 1);
  CHECK(a.identity_holds);

  const auto b = central_kernel_report(dihedral_quandle(3), perm({0, 1, 2}));
  CHECK(b.kernel_rank == 1);
  CHECK(b.orbit_count == 1);
  CHECK(b.identity_holds);

  const auto c = central_kernel_report(dihedral_quandle(4), perm({2, 3, 0, 1}));
  CHECK(c.kernel_rank == 2);
  CHECK(c.orbit_count == 2);
  CHECK(c.lambda1_count == 2);
  CHECK(c.lambda2_count == 0);
  CHECK(c.identity_holds);
}

TEST_CASE("finite symmetric associated groups") {
  const auto r3 = finite_symas_group(dihedral_quandle(3), perm({0, 1, 2}), kBound);
  REQUIRE(!r3.bound_exceeded);
  CHECK(r3.group.order() == 6);
  CHECK(validate_group(r3.group).empty());
  bool noncommuting = false;
  for (int a = 0; a < 6 && !noncommuting; ++a)
    for (int b = 0; b < 6 && !noncommuting; ++b)
      noncommuting = r3.group.mul[a][b] != r3.group.mul[b][a];
  CHECK(noncommuting);

  const auto t2 = finite_symas_group(trivial_quandle(2), perm({0, 1}), kBound);
  REQUIRE(!t2.bound_exceeded);
  CHECK(t2.group.order() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(t2.group.mul[a][b] == t2.group.mul[b][a]);

  const auto z = finite_symas_group(trivial_quandle(2), perm({1, 0}), kBound);
  CHECK(z.bound_exceeded);
}

TEST_CASE("images of s_ρ(x) s_x are trivial in the realized group") {
  const auto fin = finite_symas_group(dihedral_quandle(3), perm({0, 1, 2}), kBound);
  REQUIRE(!fin.bound_exceeded);
  for (int x = 0; x < 3; ++x)
    CHECK(fin.group.mul[fin.images[x]][fin.images[x]] == fin.group.id);
}

TEST_CASE("embeddability verdicts") {
  const auto r3 = embeddability(dihedral_quandle(3), perm({0, 1, 2}), kBound);
  CHECK(r3.status == Embeddability::Embeddable);
  CHECK(r3.method == "finite-group");

  const auto t1 = embeddability(trivial_quandle(1), perm({0}), kBound);
  CHECK(t1.status == Embeddability::Embeddable);

  // As(T₂, swap) ≅ ℤ is out of budget, but the abelianization certificate
  // separates the two elements.
  const auto t2 = embeddability(trivial_quandle(2), perm({1, 0}), kBound);
  CHECK(t2.status == Embeddability::Embeddable);
  CHECK(t2.method == "abelianization-certificate");
  CHECK(t2.certificate_separates_all);
  CHECK(t2.separated_pairs ==
        std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("symmetric conjugation closure") {
  std::vector<int> transpositions;
  const FiniteGroupTable s3 = group_from_permutations(
      {perm({1, 0, 2}), perm({0, 2, 1}), perm({2, 1, 0})}, 3, &transpositions);

  const auto closure =
      conj_symmetric_closure(s3, {transpositions[0], transpositions[1]});
  CHECK(closure.quandle.size() == 3);
  CHECK(closure.rho.is_identity());
  CHECK(are_isomorphic(closure.quandle, dihedral_quandle(3)));
  CHECK(closure.generates_group);

  const auto z4 = conj_symmetric_closure(cyclic_group(4), {1});
  CHECK(z4.quandle == trivial_quandle(2));
  CHECK(z4.labels == std::vector<int>{1, 3});
  CHECK(z4.rho == perm({1, 0}));
  CHECK(z4.generates_group);

  CHECK_THROWS_AS(conj_symmetric_closure(s3, {s3.id}), ContainsIdentityError);
}

TEST_CASE("covering group check on the reflection presentation of S3") {
  const auto p = parse_presentation(
      "gens: a b\nrel: a a\nrel: b b\nrel: a b a b^-1 a^-1 b^-1\n");
  const auto report = covering_group_check(p, kBound);
  CHECK(report.group_order == 6);
  CHECK(report.quandle_size == 3);
  CHECK(report.symas_order == 6);
  CHECK(report.quandle_generates);
  CHECK(report.quandle_avoids_identity);
  CHECK(report.is_covering == CoveringReport::Status::Yes);
}

TEST_CASE("covering group check on Z2 and on a budget failure") {
  const auto z2 = covering_group_check(parse_presentation("gens: a\nrel: a a\n"),
                                       kBound);
  CHECK(z2.group_order == 2);
  CHECK(z2.quandle_size == 1);
  CHECK(z2.symas_order == 2);
  CHECK(z2.is_covering == CoveringReport::Status::Yes);

  // ℤ² has a Wirtinger presentation; ten cosets cannot realize it.
  const auto unknown = covering_group_check(
      parse_presentation("gens: a b\nrel: b^-1 a b a^-1\n"), 10);
  CHECK(!unknown.group_order.has_value());
  CHECK(unknown.is_covering == CoveringReport::Status::Unknown);

  CHECK_THROWS_AS(covering_group_check(
                      parse_presentation("gens: a b\nrel: a b a b\n"), kBound),
                  NotTwistedWirtingerError);
}

TEST_CASE("cor4 rewrite keeps the twisted class and the group") {
  const QuandleTable q = dihedral_quandle(3);
  const Permutation rho = perm({0, 1, 2});
  const Presentation sp = symas_presentation(q, rho);
  CHECK(classify_wirtinger(sp).overall == PresentationClass::TwistedWirtinger);

  const Presentation rewritten = cor4_rewrite(sp);
  CHECK(classify_wirtinger(rewritten).overall ==
        PresentationClass::TwistedWirtinger);
  CHECK(rewritten.relators.size() == sp.relators.size());

  const auto tc1 = todd_coxeter(sp, {}, kBound);
  const auto tc2 = todd_coxeter(rewritten, {}, kBound);
  REQUIRE(!tc1.bound_exceeded);
  REQUIRE(!tc2.bound_exceeded);
  CHECK(tc1.table.count == tc2.table.count);
}

TEST_CASE("covering round trip over realized symmetric quandles") {
  const std::vector<std::pair<QuandleTable, Permutation>> pairs{
      {dihedral_quandle(3), perm({0, 1, 2})},
      {trivial_quandle(2), perm({0, 1})},
      {trivial_quandle(1), perm({0})},
  };
  for (const auto& [q, rho] : pairs) {
    const auto report =
        covering_group_check(cor4_rewrite(symas_presentation(q, rho)), kBound);
    CHECK(report.is_covering == CoveringReport::Status::Yes);
  }
}
