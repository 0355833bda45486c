#include "symq/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "symq/associated.hpp"
#include "symq/homology.hpp"
#include "symq/oracles.hpp"
#include "symq/snf.hpp"
#include "symq/todd_coxeter.hpp"

namespace symq {

Corpus build_corpus(int max_size) {
  Corpus c;
  for (int n = 1; n <= max_size; ++n) {
    const auto classes = enumerate_quandles(n, std::max(max_size, 5));
    c.class_counts.push_back(static_cast<int>(classes.size()));
    int index = 0;
    for (const QuandleTable& q : classes) {
      c.quandles.push_back(q);
      for (const Permutation& rho : enumerate_good_involutions(q))
        c.pairs.push_back({n, index, q, rho});
      ++index;
    }
  }
  return c;
}

const std::vector<std::pair<std::string, std::string>>&
presentation_fixtures() {
  static const std::vector<std::pair<std::string, std::string>> fixtures{
      {"s3_reflections.pres",
       "gens: a b\n"
       "rel: a a\n"
       "rel: b b\n"
       "rel: a b a b^-1 a^-1 b^-1\n"},
      {"trefoil_wirtinger.pres",
       "gens: a b c\n"
       "rel: b^-1 a b c^-1\n"
       "rel: c^-1 b c a^-1\n"
       "rel: a^-1 c a b^-1\n"},
      {"free_abelian_rank1.pres",
       "gens: s0 s1\n"
       "rel: s1^-1 s0 s1 s0^-1\n"
       "rel: s0^-1 s1 s0 s1^-1\n"
       "rel: s1 s0\n"
       "rel: s0 s1\n"},
  };
  return fixtures;
}

namespace {

std::string pair_label(const CorpusPair& p) {
  std::ostringstream os;
  os << "order " << p.quandle_order << " #" << p.quandle_index << " rho=[";
  for (int i = 0; i < p.rho.size(); ++i)
    os << p.rho(i) << (i + 1 < p.rho.size() ? " " : "");
  os << "]";
  return os.str();
}

struct Failures {
  int count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count == 0) first = what;
    ++count;
  }

  std::string summary(const std::string& checked) const {
    if (count == 0) return checked + ", no violations";
    return checked + ", " + std::to_string(count) +
           " violation(s); first: " + first;
  }
};

CriterionOutcome symas_abelianization_criterion(const Corpus& corpus) {
  CriterionOutcome out{1, "symmetric abelianization is Z2^L1 + Z^L2", false, ""};
  const std::vector<int> expected{1, 1, 3, 7};
  for (std::size_t i = 0; i < corpus.class_counts.size() && i < 4; ++i)
    if (corpus.class_counts[i] != expected[i]) {
      out.details = "enumeration count mismatch at order " +
                    std::to_string(i + 1) + ": got " +
                    std::to_string(corpus.class_counts[i]);
      return out;
    }
  Failures f;
  for (const CorpusPair& p : corpus.pairs)
    if (!symas_abelianization_check(p.quandle, p.rho).pass)
      f.add(pair_label(p));
  out.pass = f.count == 0;
  out.details =
      f.summary(std::to_string(corpus.pairs.size()) + " pairs checked");
  return out;
}

CriterionOutcome asq_abelianization_criterion(const Corpus& corpus) {
  CriterionOutcome out{2, "As(Q) abelianization is free on the orbits", false,
                       ""};
  Failures f;
  for (const QuandleTable& q : corpus.quandles)
    if (!asq_abelianization_check(q).pass)
      f.add("order " + std::to_string(q.size()));
  out.pass = f.count == 0;
  out.details =
      f.summary(std::to_string(corpus.quandles.size()) + " quandles checked");
  return out;
}

CriterionOutcome trichotomy_criterion(const Corpus& corpus) {
  CriterionOutcome out{3, "orbit trichotomy and |orbits| = |L1| + 2|L2|",
                       false, ""};
  Failures f;
  for (const CorpusPair& p : corpus.pairs) {
    const SymClassData data = sym_classes(p.quandle, p.rho);
    if (data.orbits.size() != data.lambda1.size() + 2 * data.lambda2.size())
      f.add("counting: " + pair_label(p));
    else if (!orbit_trichotomy_check(p.quandle, p.rho, data).ok)
      f.add("trichotomy: " + pair_label(p));
  }
  out.pass = f.count == 0;
  out.details =
      f.summary(std::to_string(corpus.pairs.size()) + " pairs checked");
  return out;
}

CriterionOutcome kamada_oshiro_criterion(const SweepOptions& opt) {
  CriterionOutcome out{4, "two-element example: As = Z, unbounded, embeddable",
                       false, ""};
  const QuandleTable t2 = trivial_quandle(2);
  const Permutation swap({1, 0});

  const AbelianInvariants ab =
      abelian_invariants(symas_presentation(t2, swap));
  const bool ab_ok = ab.torsion.empty() && ab.free_rank == 1;

  const bool bound_ok =
      todd_coxeter(symas_presentation(t2, swap), {}, opt.tc_bound)
          .bound_exceeded;

  const EmbeddabilityVerdict emb = embeddability(t2, swap, opt.tc_bound);
  const bool emb_ok = emb.status == Embeddability::Embeddable &&
                      emb.method == "abelianization-certificate";

  out.pass = ab_ok && bound_ok && emb_ok;
  std::ostringstream os;
  os << "abelianization " << to_string(ab) << (ab_ok ? " ok" : " WRONG")
     << "; coset bound " << (bound_ok ? "exceeded as expected" : "NOT hit")
     << "; verdict " << to_string(emb.status) << " via " << emb.method;
  out.details = os.str();
  return out;
}

CriterionOutcome finiteness_criterion(const Corpus& corpus,
                                      const SweepOptions& opt) {
  CriterionOutcome out{5, "involutive quandles with identity close finitely",
                       false, ""};
  Failures f;
  int checked = 0;
  for (const QuandleTable& q : corpus.quandles) {
    if (!is_involutive(q)) continue;
    ++checked;
    const auto tc = todd_coxeter(
        symas_presentation(q, Permutation::identity(q.size())), {},
        opt.finiteness_bound);
    if (tc.bound_exceeded) f.add("order " + std::to_string(q.size()));
  }
  out.pass = f.count == 0;
  out.details =
      f.summary(std::to_string(checked) + " involutive quandles closed");
  return out;
}

CriterionOutcome covering_criterion(const Corpus& corpus,
                                    const SweepOptions& opt) {
  CriterionOutcome out{6, "twisted Wirtinger presentations are covering groups",
                       false, ""};
  const Presentation s3 = parse_presentation(presentation_fixtures()[0].second);
  const CoveringReport direct = covering_group_check(s3, opt.tc_bound);
  if (!(direct.group_order == 6 && direct.quandle_size == 3 &&
        direct.symas_order == 6 &&
        direct.is_covering == CoveringReport::Status::Yes)) {
    out.details = "reflection presentation of the order-6 group failed";
    return out;
  }

  Failures f;
  int finite_pairs = 0;
  int skipped = 0;
  for (const CorpusPair& p : corpus.pairs) {
    const Presentation sp = symas_presentation(p.quandle, p.rho);
    if (todd_coxeter(sp, {}, opt.tc_bound).bound_exceeded) {
      ++skipped;  // not realized finitely within budget
      continue;
    }
    ++finite_pairs;
    const CoveringReport rt = covering_group_check(cor4_rewrite(sp), opt.tc_bound);
    if (rt.is_covering != CoveringReport::Status::Yes)
      f.add(pair_label(p));
  }
  out.pass = f.count == 0;
  out.details = f.summary("reflection example ok; " +
                          std::to_string(finite_pairs) +
                          " finite pairs round-tripped, " +
                          std::to_string(skipped) + " out of budget");
  return out;
}

CriterionOutcome homology_criterion(const SweepOptions& opt) {
  CriterionOutcome out{7, "chain and group homology agree on R3 and R5",
                       false, ""};
  std::ostringstream os;
  bool ok = true;
  for (int n : {3, 5}) {
    const QuandleTable q = dihedral_quandle(n);
    const auto involutions = enumerate_good_involutions(q);
    if (involutions.empty()) {
      ok = false;
      os << "R" << n << ": no good involutions?! ";
      continue;
    }
    for (const Permutation& rho : involutions) {
      const H2CrossCheck cc = h2_crosscheck(q, rho, opt.finiteness_bound);
      if (cc.outcome != H2CrossCheck::Outcome::Pass) ok = false;
      if (n == 3 && !cc.chain.is_trivial()) ok = false;
      os << "R" << n << ": chain " << to_string(cc.chain) << ", "
         << cc.per_basepoint.size() << " basepoints "
         << to_string(cc.outcome) << "; ";
    }
  }
  out.pass = ok;
  out.details = os.str();
  return out;
}

CriterionOutcome embeddability_criterion(const Corpus& corpus,
                                         const SweepOptions& opt) {
  CriterionOutcome out{8, "collisions are co-orbital with equal classes",
                       false, ""};
  Failures f;
  int checked = 0;
  int collisions = 0;
  for (const QuandleTable& q : corpus.quandles) {
    if (!is_involutive(q)) continue;
    ++checked;
    const Permutation id = Permutation::identity(q.size());
    const FiniteSymasResult fin =
        finite_symas_group(q, id, opt.finiteness_bound);
    if (fin.bound_exceeded) {
      f.add("unrealized involutive quandle of order " +
            std::to_string(q.size()));
      continue;
    }
    const auto ids = orbit_ids(q);
    const AbelianizedClasses ab =
        abelianization_with_classes(as_presentation(q));
    bool any_collision = false;
    for (int x = 0; x < q.size(); ++x)
      for (int y = x + 1; y < q.size(); ++y) {
        if (fin.images[x] != fin.images[y]) continue;
        any_collision = true;
        ++collisions;
        if (ids[x] != ids[y])
          f.add("collision across orbits at order " +
                std::to_string(q.size()));
        if (ab.classes[x] != ab.classes[y])
          f.add("collision with distinct classes at order " +
                std::to_string(q.size()));
      }
    const EmbeddabilityVerdict v = embeddability(q, id, opt.finiteness_bound);
    const bool expect_embeddable = !any_collision;
    if ((v.status == Embeddability::Embeddable) != expect_embeddable)
      f.add("verdict inconsistency at order " + std::to_string(q.size()));
  }
  out.pass = f.count == 0;
  out.details = f.summary(std::to_string(checked) + " involutive quandles, " +
                          std::to_string(collisions) + " collisions analyzed");
  return out;
}

CriterionOutcome infrastructure_criterion(const Corpus& corpus,
                                          const SweepOptions& opt) {
  CriterionOutcome out{9, "infrastructure oracles", false, ""};
  Failures f;

  std::mt19937 rng(20250810);
  for (int trial = 0; trial < opt.snf_trials; ++trial) {
    IntMat m(4, 4);
    for (auto& e : m.a) e = static_cast<long>(rng() % 19) - 9;
    if (smith_normal_form(m).diagonal != invariant_factors_by_minors(m)) {
      f.add("smith mismatch at trial " + std::to_string(trial));
      break;
    }
  }

  for (const QuandleTable& q : corpus.quandles) {
    const BoundaryPair b = quandle_boundary_matrices(q, opt.matrix_budget);
    if (!b.d2.multiply(b.d3).is_zero()) {
      f.add("d2·d3 != 0 at order " + std::to_string(q.size()));
      break;
    }
  }

  for (const auto& [name, text] : presentation_fixtures())
    if (print_presentation(parse_presentation(text)) != text)
      f.add("round-trip drift in " + name);

  out.pass = f.count == 0;
  out.details = f.summary(std::to_string(opt.snf_trials) +
                          " random Smith forms, boundary products, " +
                          std::to_string(presentation_fixtures().size()) +
                          " fixture round-trips");
  return out;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  const Corpus corpus = build_corpus(options.max_size);

  SweepReport report;
  report.quandle_count = static_cast<int>(corpus.quandles.size());
  report.pair_count = static_cast<int>(corpus.pairs.size());

  report.criteria.push_back(symas_abelianization_criterion(corpus));
  report.criteria.push_back(asq_abelianization_criterion(corpus));
  report.criteria.push_back(trichotomy_criterion(corpus));
  report.criteria.push_back(kamada_oshiro_criterion(options));
  report.criteria.push_back(finiteness_criterion(corpus, options));
  report.criteria.push_back(covering_criterion(corpus, options));
  report.criteria.push_back(homology_criterion(options));
  report.criteria.push_back(embeddability_criterion(corpus, options));
  report.criteria.push_back(infrastructure_criterion(corpus, options));

  report.all_pass =
      std::all_of(report.criteria.begin(), report.criteria.end(),
                  [](const CriterionOutcome& c) { return c.pass; });
  return report;
}

}  // namespace symq
