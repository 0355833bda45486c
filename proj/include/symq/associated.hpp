#ifndef SYMQ_ASSOCIATED_HPP
#define SYMQ_ASSOCIATED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symq/group_table.hpp"
#include "symq/quandle.hpp"
#include "symq/snf.hpp"
#include "symq/symmetric.hpp"
#include "symq/todd_coxeter.hpp"
#include "symq/words.hpp"

namespace symq {

/// ⟨e_x | e_y⁻¹ e_x e_y = e_{x∗y}⟩. One relator per ordered pair (x, y);
/// relators that reduce freely to the empty word are dropped.
Presentation as_presentation(const QuandleTable& q);

/// as_presentation plus one relator s_{ρ(x)} s_x per x.
Presentation symas_presentation(const QuandleTable& q, const Permutation& rho);

/// Tietze rewrite of each inversion relator s_{ρ(x)} s_x into
/// s_{ρ(x)}⁻¹ s_{ρ(x)} s_{ρ(x)} s_x, putting it literally into twisted
/// shape. The group is unchanged.
Presentation cor4_rewrite(const Presentation& symas);

struct AbCheck {
  AbelianInvariants invariants;
  bool pass = false;
};

/// Free of rank |orbits|, no torsion.
AbCheck asq_abelianization_check(const QuandleTable& q);

/// ℤ₂^{|Λ₁|} ⊕ ℤ^{|Λ₂|} exactly.
AbCheck symas_abelianization_check(const QuandleTable& q,
                                   const Permutation& rho);

/// Rank of the central kernel (the number of ~ classes) with the
/// abelianization cross-checks |orbits| = |Λ₁| + 2|Λ₂| and
/// kernel rank = |Λ₁| + |Λ₂|.
struct CentralKernelReport {
  int kernel_rank = 0;
  AbelianInvariants asq_ab;
  AbelianInvariants symas_ab;
  int orbit_count = 0;
  int lambda1_count = 0;
  int lambda2_count = 0;
  bool identity_holds = false;
};

CentralKernelReport central_kernel_report(const QuandleTable& q,
                                          const Permutation& rho);

struct FiniteSymasResult {
  bool bound_exceeded = false;
  FiniteGroupTable group;
  std::vector<int> images;  // group element of each s_x
};

/// Coset enumeration of the symmetric associated group over the trivial
/// subgroup, followed by the regular group table.
FiniteSymasResult finite_symas_group(const QuandleTable& q,
                                     const Permutation& rho, int max_cosets);

enum class Embeddability { Embeddable, NotEmbeddable, Unknown };

struct EmbeddabilityVerdict {
  Embeddability status = Embeddability::Unknown;
  std::optional<std::pair<int, int>> witness;  // collision, NotEmbeddable only
  std::string method;  // "finite-group" or "abelianization-certificate"
  /// Pairs already separated in the abelianization; filled on the
  /// certificate path.
  std::vector<std::pair<int, int>> separated_pairs;
  bool certificate_separates_all = false;
};

/// Distinctness of the s_x, decided in the realized finite group when the
/// budget allows, otherwise through the abelianization certificate (full
/// separation upgrades Unknown to Embeddable; a collision in a proper
/// quotient proves nothing, so NotEmbeddable needs the realized group).
EmbeddabilityVerdict embeddability(const QuandleTable& q,
                                   const Permutation& rho, int max_cosets);

/// ⋃_{g∈G} g⁻¹X^±g with ρ = inversion: the symmetric conjugation
/// subquandle generated by X. Throws ContainsIdentityError if 1 ∈ X^±.
struct SymConjClosure {
  QuandleTable quandle;
  Permutation rho;
  std::vector<int> labels;  // quandle index → group element
  bool generates_group = false;
};

SymConjClosure conj_symmetric_closure(const FiniteGroupTable& g,
                                      const std::vector<int>& x_gens);

struct CoveringReport {
  std::optional<int> group_order;   // absent: enumeration hit the budget
  std::optional<int> quandle_size;
  std::optional<int> symas_order;   // absent: budget hit on the closure side
  bool quandle_avoids_identity = false;
  bool quandle_generates = false;
  enum class Status { Yes, No, Unknown };
  Status is_covering = Status::Unknown;
};

/// Realizes the group of a twisted Wirtinger presentation, builds the
/// symmetric conjugation closure of its generator images, and compares
/// |As(closure, inversion)| with |G|. Throws NotTwistedWirtingerError for
/// presentations outside the twisted Wirtinger class.
CoveringReport covering_group_check(const Presentation& p, int max_cosets);

const char* to_string(Embeddability e);
const char* to_string(CoveringReport::Status s);

}  // namespace symq

#endif  // SYMQ_ASSOCIATED_HPP
