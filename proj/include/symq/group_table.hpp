#ifndef SYMQ_GROUP_TABLE_HPP
#define SYMQ_GROUP_TABLE_HPP

#include <string>
#include <vector>

#include "symq/quandle.hpp"

namespace symq {

/// Finite group by multiplication table. Element 0 need not be the
/// identity; `id` names it explicitly.
struct FiniteGroupTable {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  int id = 0;

  int order() const { return static_cast<int>(mul.size()); }
  int times(int a, int b) const { return mul[a][b]; }
  int inverse(int a) const { return inv[a]; }

  /// conjugate of g by h: h⁻¹ g h.
  int conj(int g, int h) const { return mul[mul[inv[h]][g]][h]; }
};

/// Full check of the table invariants: associativity on all triples,
/// two-sided identity, two-sided inverses. O(order³); returns an empty
/// string on success, else a description of the first failure.
std::string validate_group(const FiniteGroupTable& g);

/// Builds a group table from permutation generators (closure under
/// composition). Elements are numbered in BFS discovery order from the
/// identity. Intended for small groups in tests and fixtures.
FiniteGroupTable group_from_permutations(const std::vector<Permutation>& gens,
                                         int degree,
                                         std::vector<int>* gen_elements = nullptr);

/// Cyclic group of order n, element i = residue i, id = 0.
FiniteGroupTable cyclic_group(int n);

/// Conjugation quandle on a subset closed under conjugation by itself:
/// x∗y = y⁻¹xy. `labels` maps quandle index → group element.
struct ConjQuandle {
  QuandleTable quandle;
  std::vector<int> labels;
};

/// Throws NotClosedError{x, y} (group-element witnesses) if y⁻¹xy leaves
/// the subset for some x, y in it.
ConjQuandle conjugation_quandle(const FiniteGroupTable& g,
                                std::vector<int> subset);

/// Least subgroup containing the given elements, as a sorted element list.
std::vector<int> generated_subgroup(const FiniteGroupTable& g,
                                    const std::vector<int>& gens);

/// Derived subgroup [G,G]: closure of all commutators.
std::vector<int> derived_subgroup(const FiniteGroupTable& g);

}  // namespace symq

#endif  // SYMQ_GROUP_TABLE_HPP
