#ifndef SYMQ_CORPUS_HPP
#define SYMQ_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "symq/quandle.hpp"
#include "symq/symmetric.hpp"

namespace symq {

/// The exhaustive small-order test bed: every quandle up to isomorphism
/// together with every good involution on it.
struct CorpusPair {
  int quandle_order;
  int quandle_index;  // within its order, in canonical-key order
  QuandleTable quandle;
  Permutation rho;
};

struct Corpus {
  std::vector<QuandleTable> quandles;  // all orders, ascending
  std::vector<CorpusPair> pairs;
  std::vector<int> class_counts;  // per order 1..max_size
};

Corpus build_corpus(int max_size);

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

struct SweepOptions {
  int max_size = 4;
  int tc_bound = 10000;       // default coset budget
  int finiteness_bound = 100000;  // budget for the finiteness criterion
  long long matrix_budget = 1000000;
  int snf_trials = 100;
};

struct SweepReport {
  std::vector<CriterionOutcome> criteria;
  bool all_pass = false;
  int quandle_count = 0;
  int pair_count = 0;
};

/// Runs the whole verification sweep: the abelianization formulas, the
/// orbit trichotomy, the known infinite example, finiteness of the
/// involutive case, covering-group round trips, both H₂ routes, the
/// embeddability consistency conditions, and the infrastructure oracles.
SweepReport run_sweep(const SweepOptions& options);

/// Canonical presentation fixtures; the files under fixtures/ carry the
/// same bytes, which the round-trip check and the tests rely on.
const std::vector<std::pair<std::string, std::string>>& presentation_fixtures();

}  // namespace symq

#endif  // SYMQ_CORPUS_HPP
