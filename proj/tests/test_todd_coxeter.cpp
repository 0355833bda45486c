#include <doctest.h>

#include "symq/errors.hpp"
#include "symq/group_table.hpp"
#include "symq/todd_coxeter.hpp"
#include "symq/words.hpp"

using namespace symq;

namespace {

const char* kS3Presentation = "gens: a b\nrel: a a\nrel: b b\nrel: a b a b^-1 a^-1 b^-1\n";

/// Checks that every relator traces to the start coset everywhere.
void check_closed(const CosetTable& ct, const Presentation& p) {
  for (int c = 0; c < ct.count; ++c)
    for (const Word& r : p.relators) CHECK(ct.trace(c, r) == c);
  for (int g = 0; g < ct.ngens; ++g)
    for (int c = 0; c < ct.count; ++c) {
      CHECK(ct.inv_action[g][ct.action[g][c]] == c);
      CHECK(ct.action[g][ct.inv_action[g][c]] == c);
    }
}

}  // namespace

TEST_CASE("cyclic group of order three") {
  const auto p = parse_presentation("gens: a\nrel: a a a\n");
  const auto tc = todd_coxeter(p, {}, 100);
  REQUIRE(!tc.bound_exceeded);
  CHECK(tc.table.count == 3);
  check_closed(tc.table, p);

  const auto g = coset_group_table(tc.table);
  CHECK(validate_group(g.group).empty());
  CHECK(g.group.order() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(g.group.mul[a][b] == g.group.mul[b][a]);
}

TEST_CASE("symmetric group on three letters") {
  const auto p = parse_presentation(kS3Presentation);
  const auto tc = todd_coxeter(p, {}, 100);
  REQUIRE(!tc.bound_exceeded);

  // Independent bound: a ↦ (01), b ↦ (12) satisfies every relator and
  // generates all six permutations, so the group surjects onto S₃.
  std::vector<int> images;
  const FiniteGroupTable s3 = group_from_permutations(
      {Permutation({1, 0, 2}), Permutation({0, 2, 1})}, 3, &images);
  REQUIRE(s3.order() == 6);
  for (const Word& r : p.relators) {
    int e = s3.id;
    for (const Letter& l : r)
      e = s3.mul[e][l.sign > 0 ? images[l.gen] : s3.inv[images[l.gen]]];
    CHECK(e == s3.id);
  }
  CHECK(tc.table.count == 6);
  check_closed(tc.table, p);

  const auto g = coset_group_table(tc.table);
  CHECK(validate_group(g.group).empty());
  bool noncommuting = false;
  for (int a = 0; a < 6 && !noncommuting; ++a)
    for (int b = 0; b < 6 && !noncommuting; ++b)
      noncommuting = g.group.mul[a][b] != g.group.mul[b][a];
  CHECK(noncommuting);
}

TEST_CASE("trivial group") {
  const auto p = parse_presentation("gens: a\nrel: a\n");
  const auto tc = todd_coxeter(p, {}, 100);
  REQUIRE(!tc.bound_exceeded);
  CHECK(tc.table.count == 1);
  CHECK(coset_group_table(tc.table).group.order() == 1);
}

TEST_CASE("budget exhaustion is reported, not misread") {
  // ⟨a, b | [a,b], ab, ba⟩ ≅ ℤ: no bound can close the table.
  const auto p = parse_presentation(
      "gens: s0 s1\n"
      "rel: s1^-1 s0 s1 s0^-1\nrel: s0^-1 s1 s0 s1^-1\n"
      "rel: s1 s0\nrel: s0 s1\n");
  const auto tc = todd_coxeter(p, {}, 10000);
  CHECK(tc.bound_exceeded);

  // The free group on one generator exercises the pure-definition path.
  const auto free1 = todd_coxeter(parse_presentation("gens: a\n"), {}, 50);
  CHECK(free1.bound_exceeded);
}

TEST_CASE("nontrivial subgroups index correctly and are not regular") {
  const auto p = parse_presentation(kS3Presentation);
  const Word a{Letter(0, 1)};
  const auto tc = todd_coxeter(p, {a}, 100);
  REQUIRE(!tc.bound_exceeded);
  CHECK(tc.table.count == 3);  // index of ⟨a⟩ in S₃
  CHECK_THROWS_AS(coset_group_table(tc.table), NotRegularError);
}

TEST_CASE("subgroup indices in the dihedral presentation of S3") {
  const auto p = parse_presentation(
      "gens: a b\nrel: a a a\nrel: b b\nrel: a b a b\n");
  const Word a{Letter(0, 1)};
  const Word ab{Letter(0, 1), Letter(1, 1)};
  CHECK(todd_coxeter(p, {a}, 100).table.count == 2);
  CHECK(todd_coxeter(p, {ab}, 100).table.count == 3);
  CHECK(todd_coxeter(p, {a, ab}, 100).table.count == 1);
}

TEST_CASE("generator images come from the identity coset row") {
  const auto p = parse_presentation(kS3Presentation);
  const auto tc = todd_coxeter(p, {}, 100);
  REQUIRE(!tc.bound_exceeded);
  const auto g = coset_group_table(tc.table);
  REQUIRE(g.generator_images.size() == 2);
  for (int img : g.generator_images) {
    CHECK(img != g.group.id);
    CHECK(g.group.mul[img][img] == g.group.id);  // both images are involutions
  }
  CHECK(g.generator_images[0] != g.generator_images[1]);
}
