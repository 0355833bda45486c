#include <doctest.h>

#include <algorithm>

#include "symq/quandle.hpp"
#include "symq/symmetric.hpp"

using namespace symq;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

/// Filter-free oracle: every involution checked against the two axioms
/// stated pointwise, with no column shortcut.
std::vector<Permutation> good_involutions_by_definition(const QuandleTable& q) {
  std::vector<Permutation> out;
  for (const Permutation& rho : all_involutions(q.size())) {
    bool ok = true;
    for (int x = 0; x < q.size() && ok; ++x)
      for (int y = 0; y < q.size() && ok; ++y) {
        if (rho(q.op(x, y)) != q.op(rho(x), y)) ok = false;
        // x∗ρ(y) = S_y⁻¹(x)  ⇔  (x∗ρ(y))∗y = x
        if (q.op(q.op(x, rho(y)), y) != x) ok = false;
      }
    if (ok) out.push_back(rho);
  }
  return out;
}

}  // namespace

TEST_CASE("good involution validation") {
  CHECK(!check_good_involution(trivial_quandle(2), perm({1, 0})));
  CHECK(!check_good_involution(dihedral_quandle(3), perm({0, 1, 2})));

  const auto violation =
      check_good_involution(dihedral_quandle(3), perm({1, 0, 2}));
  REQUIRE(violation.has_value());
  CHECK(violation->kind == InvolutionViolation::Kind::Axiom2);

  const auto not_inv =
      check_good_involution(trivial_quandle(3), perm({1, 2, 0}));
  REQUIRE(not_inv.has_value());
  CHECK(not_inv->kind == InvolutionViolation::Kind::NotInvolution);
}

TEST_CASE("good involution enumeration") {
  CHECK(enumerate_good_involutions(trivial_quandle(2)).size() == 2);
  CHECK(enumerate_good_involutions(dihedral_quandle(3)).size() == 1);

  const auto r4 = enumerate_good_involutions(dihedral_quandle(4));
  REQUIRE(r4.size() == 4);
  const std::vector<Permutation> expected{
      perm({0, 1, 2, 3}), perm({0, 3, 2, 1}), perm({2, 1, 0, 3}),
      perm({2, 3, 0, 1})};
  for (const auto& rho : expected)
    CHECK(std::find(r4.begin(), r4.end(), rho) != r4.end());
}

TEST_CASE("pre-filtered enumeration matches the definitional oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const QuandleTable& q : enumerate_quandles(n)) {
      const auto fast = enumerate_good_involutions(q);
      const auto slow = good_involutions_by_definition(q);
      CHECK(fast == slow);
    }
}

TEST_CASE("identity is good exactly on involutive quandles") {
  for (int n = 1; n <= 4; ++n)
    for (const QuandleTable& q : enumerate_quandles(n)) {
      const auto good = enumerate_good_involutions(q);
      const bool has_id =
          std::any_of(good.begin(), good.end(),
                      [](const Permutation& p) { return p.is_identity(); });
      CHECK(has_id == is_involutive(q));
    }
}

TEST_CASE("sym classes: trivial quandle of size 2 with the swap") {
  const auto data = sym_classes(trivial_quandle(2), perm({1, 0}));
  CHECK(data.classes == std::vector<std::vector<int>>{{0, 1}});
  CHECK(data.reps == std::vector<int>{0});
  CHECK(data.lambda1.empty());
  CHECK(data.lambda2 == std::vector<int>{0});
  CHECK(data.orbits.size() == 2);
  CHECK(data.trichotomy_reps == std::vector<int>{0, 1});
}

TEST_CASE("sym classes: connected involutive quandle with the identity") {
  const auto data = sym_classes(dihedral_quandle(3), perm({0, 1, 2}));
  CHECK(data.classes == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(data.lambda1 == std::vector<int>{0});
  CHECK(data.lambda2.empty());
  CHECK(data.trichotomy_reps == std::vector<int>{0});
}

TEST_CASE("sym classes: mixed lambda split") {
  const auto data = sym_classes(trivial_quandle(3), perm({1, 0, 2}));
  CHECK(data.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(data.reps == std::vector<int>{0, 2});
  CHECK(data.lambda1 == std::vector<int>{1});  // class {2}
  CHECK(data.lambda2 == std::vector<int>{0});  // class {0,1}
  CHECK(data.trichotomy_reps == std::vector<int>{0, 1, 2});
}

TEST_CASE("orbit trichotomy assignments") {
  {
    const auto rho = perm({1, 0});
    const QuandleTable q = trivial_quandle(2);
    const auto t = orbit_trichotomy_check(q, rho, sym_classes(q, rho));
    REQUIRE(t.ok);
    CHECK(t.kase == std::vector<int>{2, 3});
  }
  {
    const auto rho = perm({0, 1, 2});
    const QuandleTable q = dihedral_quandle(3);
    const auto t = orbit_trichotomy_check(q, rho, sym_classes(q, rho));
    REQUIRE(t.ok);
    CHECK(t.kase == std::vector<int>{1, 1, 1});
  }
  {
    const auto rho = perm({1, 0, 2});
    const QuandleTable q = trivial_quandle(3);
    const auto t = orbit_trichotomy_check(q, rho, sym_classes(q, rho));
    REQUIRE(t.ok);
    CHECK(t.kase == std::vector<int>{2, 3, 1});
  }
}

TEST_CASE("equivariance of good involutions") {
  CHECK(check_equivariance(dihedral_quandle(3), perm({0, 1, 2})));
  CHECK(check_equivariance(trivial_quandle(2), perm({1, 0})));
}

TEST_CASE("corpus-wide structural properties of good involutions") {
  for (int n = 1; n <= 4; ++n)
    for (const QuandleTable& q : enumerate_quandles(n)) {
      for (const Permutation& rho : enumerate_good_involutions(q)) {
        CHECK(check_equivariance(q, rho));

        for (int x = 0; x < n; ++x) {
          CHECK(q.op(x, rho(x)) == x);  // x∗ρ(x) = x
          for (int y = 0; y < n; ++y)
            CHECK(q.op(q.op(y, x), rho(x)) == y);  // (y∗x)∗ρ(x) = y
        }

        // S_{ρ(y)} = S_y⁻¹ as permutations.
        for (int y = 0; y < n; ++y)
          CHECK(inner_translation(q, rho(y)) ==
                inner_translation(q, y).inverse());

        // ρ maps orbits onto orbits.
        const auto ids = orbit_ids(q);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (ids[x] == ids[y]) CHECK(ids[rho(x)] == ids[rho(y)]);

        const auto data = sym_classes(q, rho);
        CHECK(data.orbits.size() ==
              data.lambda1.size() + 2 * data.lambda2.size());

        // The trichotomy representatives meet every orbit exactly once.
        std::vector<int> hits(data.orbits.size(), 0);
        for (int r : data.trichotomy_reps) ++hits[data.orbit_of[r]];
        CHECK(std::all_of(hits.begin(), hits.end(),
                          [](int h) { return h == 1; }));

        CHECK(orbit_trichotomy_check(q, rho, data).ok);
      }
    }
}
