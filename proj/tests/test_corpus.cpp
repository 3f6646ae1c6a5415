#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fullgroup/bisection.hpp"
#include "fullgroup/corpus.hpp"
#include "fullgroup/expr.hpp"
#include "fullgroup/groupoid_json.hpp"

using namespace fullgroup;

TEST_CASE("corpus generation is deterministic and respects its caps") {
  CorpusSpec spec;
  spec.seed = 11;
  spec.count = 40;
  spec.size_cap = 20;

  std::vector<std::string> corpus = generate_corpus(spec);
  REQUIRE(corpus.size() == 40);
  CHECK(corpus == generate_corpus(spec));

  CorpusSpec other = spec;
  other.seed = 12;
  CHECK(generate_corpus(other) != corpus);

  CHECK(corpus[0] == "union(group:cyclic:2,group:cyclic:2)");
  CHECK(corpus[1] == "pair:3");
  CHECK(corpus[2] == "union(pair:2,pair:2)");
  CHECK(corpus[3] == "union(group:cyclic:2,pair:2)");
  CHECK(corpus[4] == "product(pair:2,group:cyclic:2)");
  CHECK(corpus[5] == "product(group:cyclic:2,pair:2)");

  for (std::size_t i = 6; i < corpus.size(); ++i) {
    CAPTURE(corpus[i]);
    FiniteGroupoid g = build(parse_expr(corpus[i]));
    CHECK(g.validate().ok);
    CHECK(g.size() <= spec.size_cap);
    CHECK(cmp(full_group_order(g), static_cast<unsigned long>(spec.full_group_cap)) <= 0);
  }
}

TEST_CASE("the falsification run passes on a seeded fifty-member corpus") {
  CorpusSpec spec;
  spec.seed = 1;
  spec.count = 50;
  spec.size_cap = 16;

  VerifySummary summary = run_verify(spec, 8);
  CHECK(summary.all_ok());
  CHECK(summary.checked + summary.skipped == 50);
  CHECK(summary.skipped == 0);
  CHECK(summary.injectivity_agreements == summary.checked);
  CHECK(summary.surjectivity_agreements == summary.checked);
  CHECK(summary.order_formula_agreements == summary.checked);
  CHECK(summary.kernel_checks == summary.checked);
  CHECK(summary.pair_checks == 8L * summary.checked);
  CHECK(summary.element_checks == 8L * summary.checked);
  CHECK(summary.witness_checks == summary.checked);

  // All six witness constructions fire at least once.
  CHECK(summary.witness_kinds.size() == 6);
  for (const auto& [kind, count] : summary.witness_kinds) {
    CAPTURE(kind);
    CHECK(count >= 1);
  }

  // Machine output is stable and self-consistent.
  nlohmann::json j = summary.to_json();
  CHECK(j["all_ok"] == true);
  CHECK(j["checked"] == summary.checked);
  CHECK(j["members"].size() == 50);
  CHECK(j.dump() == summary.to_json().dump());
  CHECK(summary.table().find("all checks passed") != std::string::npos);
}

TEST_CASE("a corpus of groups is entirely surjective") {
  CorpusSpec spec;
  spec.seed = 3;
  spec.count = 25;
  spec.weights = CorpusWeights{1, 0, 0, 0};
  spec.include_coverage_kernel = false;

  VerifySummary summary = run_verify(spec, 4);
  CHECK(summary.all_ok());
  REQUIRE(summary.members.size() == 25);
  for (const MemberReport& m : summary.members) {
    CAPTURE(m.expr);
    CHECK(m.units == 1);
    CHECK(m.surjective);
    CHECK(m.injective);  // groups are also injective, hence no witness
    CHECK(m.witness_kind.empty());
  }
}

TEST_CASE("pair groupoids are never surjective") {
  CorpusSpec spec;
  spec.include_coverage_kernel = false;
  VerifySummary summary = verify_corpus({"pair:2", "pair:3", "pair:4"}, spec, 4);
  CHECK(summary.all_ok());
  for (const MemberReport& m : summary.members) {
    CHECK(!m.surjective);
  }
  CHECK(summary.members[0].injective);   // two non-units only
  CHECK(!summary.members[1].injective);
  CHECK(summary.members[1].witness_kind == "chained-path");
}

TEST_CASE("members beyond the enumeration cap are skipped and counted") {
  CorpusSpec spec;
  spec.include_coverage_kernel = false;
  spec.full_group_cap = 10;
  VerifySummary summary = verify_corpus({"pair:4", "pair:2"}, spec, 4);
  CHECK(summary.all_ok());
  CHECK(summary.skipped == 1);
  CHECK(summary.checked == 1);
  CHECK(summary.members[0].skipped);
  CHECK(!summary.members[1].skipped);
}

TEST_CASE("an axiom-violating member surfaces as a failure, not a crash") {
  FiniteGroupoid z2 = build(parse_expr("group:cyclic:2"));
  std::vector<int> compose = z2.compose_table();
  compose[1 * 2 + 1] = 1;  // g . g rewired from e to g
  FiniteGroupoid broken(1, z2.range_vector(), z2.source_vector(), z2.inverse_vector(),
                        std::move(compose), z2.labels());

  std::string path = "corpus_test_broken.json";
  std::ofstream(path) << groupoid_to_json(broken).dump();
  CorpusSpec spec;
  spec.include_coverage_kernel = false;
  VerifySummary summary = verify_corpus({"file:" + path, "pair:2"}, spec, 2);
  std::remove(path.c_str());

  CHECK(!summary.all_ok());
  REQUIRE(!summary.failures.empty());
  CHECK(summary.failures[0].find("validation") != std::string::npos);
  CHECK(summary.checked == 1);  // the healthy member still runs
  CHECK(summary.table().find("FAILURES") != std::string::npos);
}
