#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "fullgroup/analysis.hpp"

namespace fullgroup {

/// Relative weights for the random constructor mix.
struct CorpusWeights {
  int group = 3;
  int pair = 2;
  int product = 2;
  int disjoint_union = 3;
};

/// Recipe for a deterministic groupoid corpus: same spec, same corpus.
struct CorpusSpec {
  std::uint64_t seed = 1;
  int count = 200;
  /// Largest arrow count accepted for a member.
  int size_cap = 24;
  /// Largest full group accepted for oracle checks; members beyond it are
  /// generated but skipped (and counted) by run_verify.
  std::size_t full_group_cap = 5000;
  CorpusWeights weights{};
  /// Start with six fixed members that realize both halves of the
  /// injectivity characterization and every witness construction.
  bool include_coverage_kernel = true;
};

/// Deterministic corpus as description strings (see parse_expr).  Members are
/// drawn from cyclic groups to order 8, symmetric groups to degree 3, pair
/// groupoids to 4 units, pair-by-group products, and disjoint unions of up to
/// three such pieces, resampling anything over the size cap.
std::vector<std::string> generate_corpus(const CorpusSpec& spec);

/// One corpus member's verification outcome.
struct MemberReport {
  std::string expr;
  int arrows = 0;
  int units = 0;
  std::string full_group_order;  // decimal digits
  bool skipped = false;          // full group over the cap
  bool injective = false;
  bool surjective = false;
  std::string witness_kind;      // empty when the representation is injective
  std::vector<std::string> failures;
};

/// Aggregated outcome of the falsification run.
struct VerifySummary {
  std::uint64_t seed = 0;
  int count = 0;
  int size_cap = 0;
  std::size_t full_group_cap = 0;
  int pairs = 0;

  std::vector<MemberReport> members;
  int checked = 0;
  int skipped = 0;
  long injectivity_agreements = 0;
  long surjectivity_agreements = 0;
  long order_formula_agreements = 0;
  long kernel_checks = 0;
  long indicator_membership_checks = 0;
  long witness_checks = 0;
  long pair_checks = 0;
  long element_checks = 0;
  std::map<std::string, int> witness_kinds;
  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
  /// Human-readable run summary.
  std::string table() const;
};

/// Runs every exact check over the corpus: validation, the
/// injectivity/surjectivity characterizations against the linear-algebra
/// oracles, order formula vs. enumeration, kernel-basis consistency, witness
/// certificates, indicator membership, and `pairs` seeded random
/// homomorphism / fiber-sum / row-sum checks per member.
VerifySummary run_verify(const CorpusSpec& spec, int pairs = 32);

/// Same checks over an explicit member list (descriptions as for parse_expr).
VerifySummary verify_corpus(const std::vector<std::string>& exprs, const CorpusSpec& spec,
                            int pairs = 32);

}  // namespace fullgroup
