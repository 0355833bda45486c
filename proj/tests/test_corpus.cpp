#include <doctest.h>

#include "symq/corpus.hpp"
#include "symq/json_io.hpp"

using namespace symq;

TEST_CASE("shipped fixtures carry the embedded bytes") {
  for (const auto& [name, text] : presentation_fixtures())
    CHECK(read_file(std::string(SYMQ_FIXTURES_DIR) + "/" + name) == text);
}

TEST_CASE("corpus construction") {
  const Corpus c = build_corpus(3);
  CHECK(c.class_counts == std::vector<int>{1, 1, 3});
  CHECK(c.quandles.size() == 5);
  // 1 + 2 + (4 + 2 + 1) good involutions over the five quandles.
  CHECK(c.pairs.size() == 10);
}

TEST_CASE("sweep passes on the three-element corpus") {
  SweepOptions opt;
  opt.max_size = 3;
  opt.snf_trials = 20;
  const SweepReport report = run_sweep(opt);
  REQUIRE(report.criteria.size() == 9);
  for (const auto& c : report.criteria) {
    INFO("criterion ", c.id, ": ", c.details);
    CHECK(c.pass);
  }
  CHECK(report.all_pass);
}
