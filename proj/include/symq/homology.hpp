#ifndef SYMQ_HOMOLOGY_HPP
#define SYMQ_HOMOLOGY_HPP

#include <array>
#include <utility>
#include <vector>

#include "symq/quandle.hpp"
#include "symq/snf.hpp"

namespace symq {

/// Boundary matrices of the quandle complex in degrees 3 → 2 → 1, over
/// the bases of tuples with no adjacent repeat. Column convention:
/// d2 is |Q| × #pairs, d3 is #pairs × #triples, and d2·d3 = 0.
struct BoundaryPair {
  std::vector<std::pair<int, int>> pair_basis;
  std::vector<std::array<int, 3>> triple_basis;
  IntMat d2;
  IntMat d3;
};

/// ∂ₙ(x₁,…,xₙ) = Σᵢ₌₂ⁿ (−1)ⁱ[(…,x̂ᵢ,…) − (x₁∗xᵢ,…,x_{i−1}∗xᵢ,x_{i+1},…)],
/// reduced modulo tuples with an adjacent equal pair. Throws
/// SizeLimitError when n⁴ exceeds max_entries.
BoundaryPair quandle_boundary_matrices(const QuandleTable& q,
                                       long long max_entries = 1000000);

/// H₂ = ker d2 / im d3 by integer Smith reduction.
AbelianInvariants h2_chain(const QuandleTable& q,
                           long long max_entries = 1000000);

/// H₂ through the associated group of a symmetric quandle:
/// (Stab(x₀) ∩ derived subgroup)_Ab inside the realized finite As(Q,ρ).
/// Requires a connected quandle (NotConnectedError otherwise);
/// bound_exceeded reports an unrealized group, not a value.
struct H2GroupResult {
  bool bound_exceeded = false;
  AbelianInvariants invariants;
  int group_order = 0;
  int stabilizer_order = 0;
  int derived_order = 0;
  int intersection_order = 0;
};

H2GroupResult h2_group_formula(const QuandleTable& q, const Permutation& rho,
                               int x0, int max_cosets);

/// Chain value against the group value for every basepoint.
struct H2CrossCheck {
  enum class Outcome { Pass, Fail, Unknown };
  Outcome outcome = Outcome::Unknown;
  AbelianInvariants chain;
  std::vector<H2GroupResult> per_basepoint;
};

H2CrossCheck h2_crosscheck(const QuandleTable& q, const Permutation& rho,
                           int max_cosets);

const char* to_string(H2CrossCheck::Outcome o);

}  // namespace symq

#endif  // SYMQ_HOMOLOGY_HPP
