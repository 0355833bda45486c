#ifndef SYMQ_SYMMETRIC_HPP
#define SYMQ_SYMMETRIC_HPP

#include <optional>
#include <vector>

#include "symq/quandle.hpp"

namespace symq {

/// First failed good-involution condition.
///  NotInvolution: ρ²(x) ≠ x at x.
///  Axiom1: ρ(x∗y) ≠ ρ(x)∗y at (x, y).
///  Axiom2: x∗ρ(y) ≠ S_y⁻¹(x) at (x, y).
struct InvolutionViolation {
  enum class Kind { NotInvolution, Axiom1, Axiom2 };
  Kind kind;
  int x = -1;
  int y = -1;
};

/// nullopt = ρ is a good involution for q.
std::optional<InvolutionViolation> check_good_involution(const QuandleTable& q,
                                                         const Permutation& rho);

/// Brute force over all involutions of 0..n-1, with the column identity
/// S_{ρ(y)} = S_y⁻¹ as a fast pre-filter before the pointwise check.
std::vector<Permutation> enumerate_good_involutions(const QuandleTable& q);

/// All involutions of 0..n-1 in generation order (smallest unpaired point
/// maps to itself first, then to each larger partner).
std::vector<Permutation> all_involutions(int n);

/// The equivalence closure of x ~ x∗y, x ~ ρ(x), with the derived
/// representative set C and its Λ₁/Λ₂ split.
struct SymClassData {
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;
  std::vector<std::vector<int>> classes;  // blocks ordered by min element
  std::vector<int> class_of;
  std::vector<int> reps;     // minimal index per class (the set C)
  std::vector<int> lambda1;  // class ids with ρ(rep) in the rep's orbit
  std::vector<int> lambda2;  // the rest
  /// {x_λ : λ∈Λ} ∪ {ρ(x_λ) : λ∈Λ₂}, ascending; meets every orbit once.
  std::vector<int> trichotomy_reps;
};

SymClassData sym_classes(const QuandleTable& q, const Permutation& rho);

/// Per-element trichotomy: which of the three orbit families contains x.
/// kase[x] ∈ {1, 2, 3}: O(x_λ) for λ∈Λ₁, O(x_λ) for λ∈Λ₂, O(ρ(x_λ)) for
/// λ∈Λ₂. A failure marks an implementation bug, not a domain outcome.
struct TrichotomyAssignment {
  bool ok = true;
  int failed_element = -1;
  std::vector<int> kase;
  std::vector<int> lambda;  // class id of the witnessing representative
};

TrichotomyAssignment orbit_trichotomy_check(const QuandleTable& q,
                                            const Permutation& rho,
                                            const SymClassData& data);

/// ρ∘S_y = S_y∘ρ and ρ∘S_y⁻¹ = S_y⁻¹∘ρ for all y.
bool check_equivariance(const QuandleTable& q, const Permutation& rho);

}  // namespace symq

#endif  // SYMQ_SYMMETRIC_HPP
