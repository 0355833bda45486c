#include "symq/associated.hpp"

#include <algorithm>
#include <stdexcept>

#include "symq/errors.hpp"

namespace symq {

namespace {

std::vector<std::string> generator_names(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Presentation as_presentation(const QuandleTable& q) {
  const int n = q.size();
  Presentation p;
  p.generators = generator_names("e", n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Word w{Letter(y, -1), Letter(x, 1), Letter(y, 1), Letter(q.op(x, y), -1)};
      if (!free_reduce(w).empty()) p.relators.push_back(std::move(w));
    }
  return p;
}

Presentation symas_presentation(const QuandleTable& q,
                                const Permutation& rho) {
  Presentation p = as_presentation(q);
  for (auto& name : p.generators) name[0] = 's';
  for (int x = 0; x < q.size(); ++x)
    p.relators.push_back(Word{Letter(rho(x), 1), Letter(x, 1)});
  return p;
}

Presentation cor4_rewrite(const Presentation& symas) {
  Presentation out = symas;
  for (Word& r : out.relators) {
    if (r.size() == 2 && r[0].sign == 1 && r[1].sign == 1) {
      const int a = r[0].gen;
      const int b = r[1].gen;
      r = Word{Letter(a, -1), Letter(a, 1), Letter(a, 1), Letter(b, 1)};
    }
  }
  return out;
}

AbCheck asq_abelianization_check(const QuandleTable& q) {
  AbCheck out;
  out.invariants = abelian_invariants(as_presentation(q));
  const int norbits = static_cast<int>(orbits(q).size());
  out.pass =
      out.invariants.torsion.empty() && out.invariants.free_rank == norbits;
  return out;
}

AbCheck symas_abelianization_check(const QuandleTable& q,
                                   const Permutation& rho) {
  AbCheck out;
  out.invariants = abelian_invariants(symas_presentation(q, rho));
  const SymClassData data = sym_classes(q, rho);
  const auto expected_torsion =
      std::vector<long long>(data.lambda1.size(), 2);
  out.pass = out.invariants.torsion == expected_torsion &&
             out.invariants.free_rank == static_cast<int>(data.lambda2.size());
  return out;
}

CentralKernelReport central_kernel_report(const QuandleTable& q,
                                          const Permutation& rho) {
  const SymClassData data = sym_classes(q, rho);
  CentralKernelReport out;
  out.kernel_rank = static_cast<int>(data.classes.size());
  out.asq_ab = abelian_invariants(as_presentation(q));
  out.symas_ab = abelian_invariants(symas_presentation(q, rho));
  out.orbit_count = static_cast<int>(data.orbits.size());
  out.lambda1_count = static_cast<int>(data.lambda1.size());
  out.lambda2_count = static_cast<int>(data.lambda2.size());
  out.identity_holds =
      out.orbit_count == out.lambda1_count + 2 * out.lambda2_count &&
      out.kernel_rank == out.lambda1_count + out.lambda2_count &&
      out.asq_ab.torsion.empty() && out.asq_ab.free_rank == out.orbit_count &&
      out.symas_ab.free_rank == out.lambda2_count &&
      static_cast<int>(out.symas_ab.torsion.size()) == out.lambda1_count &&
      std::all_of(out.symas_ab.torsion.begin(), out.symas_ab.torsion.end(),
                  [](long long d) { return d == 2; });
  return out;
}

FiniteSymasResult finite_symas_group(const QuandleTable& q,
                                     const Permutation& rho, int max_cosets) {
  FiniteSymasResult out;
  const auto tc = todd_coxeter(symas_presentation(q, rho), {}, max_cosets);
  if (tc.bound_exceeded) {
    out.bound_exceeded = true;
    return out;
  }
  auto g = coset_group_table(tc.table);
  out.group = std::move(g.group);
  out.images = std::move(g.generator_images);
  return out;
}

EmbeddabilityVerdict embeddability(const QuandleTable& q,
                                   const Permutation& rho, int max_cosets) {
  const int n = q.size();
  EmbeddabilityVerdict out;

  const FiniteSymasResult fin = finite_symas_group(q, rho, max_cosets);
  if (!fin.bound_exceeded) {
    out.method = "finite-group";
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (fin.images[x] == fin.images[y]) {
          out.status = Embeddability::NotEmbeddable;
          out.witness = {x, y};
          return out;
        }
    out.status = Embeddability::Embeddable;
    return out;
  }

  // Separation in the abelianization quotient transfers to the group;
  // collisions there prove nothing.
  out.method = "abelianization-certificate";
  const AbelianizedClasses ab =
      abelianization_with_classes(symas_presentation(q, rho));
  bool all = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (ab.classes[x] != ab.classes[y])
        out.separated_pairs.emplace_back(x, y);
      else
        all = false;
    }
  out.certificate_separates_all = all;
  out.status = all ? Embeddability::Embeddable : Embeddability::Unknown;
  return out;
}

SymConjClosure conj_symmetric_closure(const FiniteGroupTable& g,
                                      const std::vector<int>& x_gens) {
  std::vector<char> in(g.order(), 0);
  for (int x : x_gens) {
    if (x == g.id || g.inv[x] == g.id) throw ContainsIdentityError();
    in[x] = 1;
    in[g.inv[x]] = 1;
  }
  // Conjugating by every group element closes the set; conjugates of
  // conjugates introduce nothing new.
  std::vector<char> closed(g.order(), 0);
  for (int x = 0; x < g.order(); ++x)
    if (in[x])
      for (int h = 0; h < g.order(); ++h) closed[g.conj(x, h)] = 1;

  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (closed[x]) members.push_back(x);

  SymConjClosure out;
  ConjQuandle cq = conjugation_quandle(g, members);
  out.quandle = std::move(cq.quandle);
  out.labels = std::move(cq.labels);

  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.labels.size()); ++i)
    pos[out.labels[i]] = i;
  std::vector<int> rho_imgs(out.labels.size());
  for (int i = 0; i < static_cast<int>(out.labels.size()); ++i)
    rho_imgs[i] = pos[g.inv[out.labels[i]]];
  out.rho = Permutation(std::move(rho_imgs));
  if (check_good_involution(out.quandle, out.rho))
    throw std::logic_error("inversion is not good on the conjugation closure");

  out.generates_group =
      static_cast<int>(generated_subgroup(g, out.labels).size()) == g.order();
  return out;
}

CoveringReport covering_group_check(const Presentation& p, int max_cosets) {
  const auto cls = classify_wirtinger(p);
  if (cls.overall == PresentationClass::General)
    throw NotTwistedWirtingerError();

  CoveringReport out;
  const auto tc = todd_coxeter(p, {}, max_cosets);
  if (tc.bound_exceeded) return out;  // everything Unknown

  const GroupFromCosets g = coset_group_table(tc.table);
  out.group_order = g.group.order();

  const SymConjClosure closure =
      conj_symmetric_closure(g.group, g.generator_images);
  out.quandle_size = closure.quandle.size();
  out.quandle_avoids_identity = true;  // guaranteed by the closure
  out.quandle_generates = closure.generates_group;

  const auto tc2 =
      todd_coxeter(symas_presentation(closure.quandle, closure.rho), {},
                   max_cosets);
  if (tc2.bound_exceeded) return out;  // is_covering stays Unknown
  out.symas_order = tc2.table.count;

  out.is_covering = (*out.symas_order == *out.group_order &&
                     out.quandle_generates && out.quandle_avoids_identity)
                        ? CoveringReport::Status::Yes
                        : CoveringReport::Status::No;
  return out;
}

const char* to_string(Embeddability e) {
  switch (e) {
    case Embeddability::Embeddable: return "Embeddable";
    case Embeddability::NotEmbeddable: return "NotEmbeddable";
    case Embeddability::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(CoveringReport::Status s) {
  switch (s) {
    case CoveringReport::Status::Yes: return "yes";
    case CoveringReport::Status::No: return "no";
    case CoveringReport::Status::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace symq
