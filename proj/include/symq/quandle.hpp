#ifndef SYMQ_QUANDLE_HPP
#define SYMQ_QUANDLE_HPP

#include <array>
#include <compare>
#include <optional>
#include <vector>

namespace symq {

/// A bijection of 0..n-1 stored by images.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return Permutation(std::move(v));
  }

  static bool is_bijection(const std::vector<int>& imgs);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }

  Permutation inverse() const;
  /// Composition this∘other: x ↦ this(other(x)).
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images <=> b.images;
  }
};

/// Finite quandle as an n×n operation table, table[x][y] = x∗y.
///
/// Instances produced by the constructors and by validate_quandle satisfy
/// the three quandle axioms; the raw struct carries no validity flag, so
/// anything built by hand should go through validate_quandle first.
struct QuandleTable {
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(table.size()); }
  int op(int x, int y) const { return table[x][y]; }

  friend bool operator==(const QuandleTable&, const QuandleTable&) = default;
};

/// One violated quandle axiom with a witness.
/// axiom 1: idempotence fails at x = witness[0].
/// axiom 2: column witness[1] is not a bijection.
/// axiom 3: self-distributivity fails at (witness[0..2]).
struct AxiomViolation {
  int axiom = 0;
  std::array<int, 3> witness{-1, -1, -1};
};

struct QuandleValidation {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the three axioms; entries must already be in 0..n-1
/// (out-of-range input is a format concern, rejected with
/// std::invalid_argument rather than reported as an axiom violation).
QuandleValidation validate_quandle(const QuandleTable& q);

/// x∗y = x for all x, y.
QuandleTable trivial_quandle(int n);

/// x∗y = 2y−x mod n. Involutive for every n.
QuandleTable dihedral_quandle(int n);

/// S_y as a permutation: x ↦ x∗y.
Permutation inner_translation(const QuandleTable& q, int y);

/// Orbits of the inner group ⟨S_y⟩ = connected components.
/// Blocks ordered by minimum element.
std::vector<std::vector<int>> orbits(const QuandleTable& q);

/// Element → orbit id, with orbits numbered as in orbits().
std::vector<int> orbit_ids(const QuandleTable& q);

bool is_connected(const QuandleTable& q);

/// True iff every S_y squares to the identity (kei condition).
bool is_involutive(const QuandleTable& q);

/// Image quandle under a relabeling: table'[p(x)][p(y)] = p(table[x][y]).
QuandleTable relabel(const QuandleTable& q, const Permutation& p);

/// Brute force over all bijections; intended for n ≤ 8.
bool are_isomorphic(const QuandleTable& a, const QuandleTable& b);

/// Lexicographically minimal relabeling of the table, used as an
/// isomorphism-class key.
std::vector<int> canonical_key(const QuandleTable& q);

/// All quandles of order n up to isomorphism, sorted by canonical key.
/// Throws LimitExceededError if n exceeds the limit.
std::vector<QuandleTable> enumerate_quandles(int n, int limit = 5);

}  // namespace symq

#endif  // SYMQ_QUANDLE_HPP
