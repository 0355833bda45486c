#ifndef SYMQ_TODD_COXETER_HPP
#define SYMQ_TODD_COXETER_HPP

#include <vector>

#include "symq/group_table.hpp"
#include "symq/words.hpp"

namespace symq {

/// Complete, closed coset table: every coset has an image under every
/// generator and its inverse, and every relator traces to the identity
/// at every coset.
struct CosetTable {
  int ngens = 0;
  int count = 0;
  std::vector<std::vector<int>> action;      // action[g][coset]
  std::vector<std::vector<int>> inv_action;  // action of g⁻¹
  bool regular = false;  // enumerated over the trivial subgroup

  int trace(int coset, const Word& w) const {
    for (const Letter& l : w)
      coset = l.sign > 0 ? action[l.gen][coset] : inv_action[l.gen][coset];
    return coset;
  }
};

struct ToddCoxeterResult {
  bool bound_exceeded = false;
  CosetTable table;  // meaningful only when !bound_exceeded
};

/// HLT-style coset enumeration with coincidence handling and a lookahead
/// collapse pass before giving up on the coset budget. Deterministic:
/// cosets are numbered by first definition, scan order is fixed, and the
/// final table is renumbered by definition order of the survivors.
///
/// BoundExceeded means "not shown to have index ≤ max_cosets within the
/// budget"; it is never evidence that the index is infinite.
ToddCoxeterResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_gens,
                               int max_cosets);

/// Group of order ct.count from a coset table over the trivial subgroup
/// (the right regular action), plus the element of each presentation
/// generator. Throws NotRegularError otherwise.
struct GroupFromCosets {
  FiniteGroupTable group;
  std::vector<int> generator_images;
};

GroupFromCosets coset_group_table(const CosetTable& ct);

}  // namespace symq

#endif  // SYMQ_TODD_COXETER_HPP
