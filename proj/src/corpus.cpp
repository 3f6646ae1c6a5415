#include "fullgroup/corpus.hpp"

#include <sstream>
#include <stdexcept>

#include "fullgroup/errors.hpp"
#include "fullgroup/expr.hpp"
#include "fullgroup/random_elements.hpp"

namespace fullgroup {

namespace {

/// Six fixed members realizing both halves of the injectivity
/// characterization and, between them, every witness construction: two
/// isotropy loops at distinct units; a chained pair of paths; two disjoint
/// paths; a loop away from a path; a loop at the range of a path; and two
/// parallel arrows.
const char* const kCoverageKernel[] = {
    "union(group:cyclic:2,group:cyclic:2)",
    "pair:3",
    "union(pair:2,pair:2)",
    "union(group:cyclic:2,pair:2)",
    "product(pair:2,group:cyclic:2)",
    "product(group:cyclic:2,pair:2)",
};

std::string random_group_expr(Rng& rng) {
  if (rng.chance(1, 5)) return "group:sym:3";
  return "group:cyclic:" + std::to_string(2 + rng.next_below(7));
}

std::string random_pair_expr(Rng& rng) {
  return "pair:" + std::to_string(2 + rng.next_below(3));
}

std::string random_product_expr(Rng& rng) {
  std::string left = "pair:" + std::to_string(2 + rng.next_below(2));
  std::string right = rng.chance(1, 4)
                          ? std::string("group:sym:3")
                          : "group:cyclic:" + std::to_string(2 + rng.next_below(3));
  return "product(" + left + "," + right + ")";
}

std::string random_piece(Rng& rng, const CorpusWeights& w) {
  int total = w.group + w.pair + w.product;
  if (total <= 0) throw std::invalid_argument("corpus weights must include a non-union constructor");
  auto roll = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(total)));
  if (roll < w.group) return random_group_expr(rng);
  if (roll < w.group + w.pair) return random_pair_expr(rng);
  return random_product_expr(rng);
}

std::string random_member(Rng& rng, const CorpusWeights& w) {
  int total = w.group + w.pair + w.product + w.disjoint_union;
  if (total <= 0) throw std::invalid_argument("corpus weights must not all be zero");
  auto roll = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(total)));
  if (roll >= w.group + w.pair + w.product) {
    std::string e = random_piece(rng, w);
    std::uint64_t pieces = 2 + rng.next_below(2);
    for (std::uint64_t i = 1; i < pieces; ++i) {
      e = "union(" + e + "," + random_piece(rng, w) + ")";
    }
    return e;
  }
  return random_piece(rng, w);
}

}  // namespace

std::vector<std::string> generate_corpus(const CorpusSpec& spec) {
  std::vector<std::string> out;
  if (spec.include_coverage_kernel) {
    for (const char* e : kCoverageKernel) {
      if (static_cast<int>(out.size()) >= spec.count) break;
      out.push_back(e);
    }
  }
  Rng rng(spec.seed);
  while (static_cast<int>(out.size()) < spec.count) {
    std::string candidate;
    bool accepted = false;
    for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
      candidate = random_member(rng, spec.weights);
      FiniteGroupoid g = build(parse_expr(candidate));
      if (g.size() > spec.size_cap) continue;
      if (cmp(full_group_order(g), static_cast<unsigned long>(spec.full_group_cap)) > 0) continue;
      accepted = true;
    }
    out.push_back(accepted ? candidate : "group:cyclic:2");
  }
  return out;
}

namespace {

struct MemberContext {
  VerifySummary& summary;
  MemberReport& report;

  void fail(const std::string& message) {
    if (report.failures.size() < 8) report.failures.push_back(message);
    if (summary.failures.size() < 100) {
      summary.failures.push_back(report.expr + ": " + message);
    } else if (summary.failures.size() == 100) {
      summary.failures.push_back("(further failures suppressed)");
    }
  }
};

void check_structure(const FiniteGroupoid& g, const RepresentationAnalysis& an,
                     MemberContext& ctx) {
  VerifySummary& s = ctx.summary;

  const bool inj_oracle = an.kernel_dimension() == 0;
  const bool inj_thm = injective_by_theorem(g).injective;
  ctx.report.injective = inj_thm;
  if (inj_oracle == inj_thm) {
    ++s.injectivity_agreements;
  } else {
    ctx.fail("injectivity characterization disagrees with the kernel oracle");
  }

  const bool sur_oracle = an.image_dimension() == static_cast<std::size_t>(g.size());
  const bool sur_thm = surjective_by_theorem(g);
  const bool one_unit = g.num_units() == 1;
  ctx.report.surjective = sur_thm;
  if (sur_oracle == sur_thm && sur_thm == one_unit) {
    ++s.surjectivity_agreements;
  } else {
    ctx.fail("surjectivity characterization disagrees with the image-dimension oracle");
  }

  if (cmp(an.full_group_order(), static_cast<unsigned long>(an.full_group().size())) == 0) {
    ++s.order_formula_agreements;
  } else {
    ctx.fail("order formula disagrees with enumeration");
  }

  bool kernel_ok = an.kernel_dimension() + an.image_dimension() == an.full_group().size();
  if (kernel_ok && an.full_group().size() <= 256) {
    std::vector<GroupRingElement> basis = an.kernel_basis();
    if (basis.size() != an.kernel_dimension()) kernel_ok = false;
    for (const GroupRingElement& k : basis) {
      if (!kernel_ok) break;
      if (k.is_zero() || !pi(k).is_zero()) kernel_ok = false;
    }
  }
  if (kernel_ok) {
    ++s.kernel_checks;
  } else {
    ctx.fail("kernel basis fails its certificate");
  }
}

void check_witness(const FiniteGroupoid& g, MemberContext& ctx) {
  if (injective_by_theorem(g).injective) {
    bool threw = false;
    try {
      noninjectivity_witness(g);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (threw) {
      ++ctx.summary.witness_checks;
    } else {
      ctx.fail("witness constructed for an injective representation");
    }
    return;
  }
  try {
    Witness w = noninjectivity_witness(g);
    if (w.element.is_zero() || !pi(w.element).is_zero()) {
      ctx.fail("witness fails its certificate");
      return;
    }
    ++ctx.summary.witness_checks;
    std::string kind = to_string(w.initial_kind);
    ctx.report.witness_kind = kind;
    ++ctx.summary.witness_kinds[kind];
  } catch (const std::exception& e) {
    ctx.fail(std::string("witness construction failed: ") + e.what());
  }
}

void check_indicators(const FiniteGroupoid& g, const RepresentationAnalysis& an,
                      MemberContext& ctx) {
  const bool is_group = g.num_units() == 1;
  for (ArrowId a = 0; a < g.size(); ++a) {
    Membership m = an.membership(SteinbergElement::point_mass(g, a));
    if (m.member != is_group) {
      ctx.fail("indicator of arrow " + g.label(a) +
               (m.member ? " lies in the image span" : " missing from the image span"));
      return;
    }
    if (m.member && m.coefficients && an.full_group().size() <= 256) {
      GroupRingElement x = an.from_coefficients(*m.coefficients);
      if (pi(x) != SteinbergElement::point_mass(g, a)) {
        ctx.fail("membership coefficients fail to reconstruct the indicator of " + g.label(a));
        return;
      }
    }
    ++ctx.summary.indicator_membership_checks;
  }
}

void check_random_pairs(const FiniteGroupoid& g, const RepresentationAnalysis& an, int pairs,
                        Rng& rng, MemberContext& ctx) {
  const int units = g.num_units();
  for (int p = 0; p < pairs; ++p) {
    SteinbergElement f = random_steinberg(g, rng);
    SteinbergElement h = random_steinberg(g, rng);
    if (t_matrix(convolve(f, h)) != t_matrix(f) * t_matrix(h)) {
      ctx.fail("fiber-sum matrix is not multiplicative");
      return;
    }
    if (t_matrix(involute(f)) != t_matrix(f).adjoint()) {
      ctx.fail("fiber-sum matrix does not intertwine the involutions");
      return;
    }

    GroupRingElement x = random_group_ring(g, an.full_group(), rng);
    GroupRingElement y = random_group_ring(g, an.full_group(), rng);
    if (pi(x * y) != convolve(pi(x), pi(y))) {
      ctx.fail("representation is not multiplicative");
      return;
    }
    if (pi(x.star()) != involute(pi(x))) {
      ctx.fail("representation does not intertwine the involutions");
      return;
    }
    ++ctx.summary.pair_checks;

    SteinbergElement px = pi(x);
    if (!delta1(px).is_zero()) {
      ctx.fail("source and range pushforwards differ on an image element");
      return;
    }
    ComplexMatrix t = t_matrix(px);
    const GaussianRational expected = t.row_sum(0);
    bool sums_ok = true;
    for (int i = 0; i < units && sums_ok; ++i) {
      if (t.row_sum(i) != expected || t.col_sum(i) != expected) sums_ok = false;
    }
    if (!sums_ok) {
      ctx.fail("row/column sums of an image fiber-sum matrix differ");
      return;
    }
    ++ctx.summary.element_checks;
  }
}

void verify_member(const std::string& expr_text, const CorpusSpec& spec, int pairs,
                   std::uint64_t member_index, VerifySummary& summary) {
  summary.members.push_back(MemberReport{});
  MemberReport& report = summary.members.back();
  report.expr = expr_text;
  MemberContext ctx{summary, report};

  try {
    FiniteGroupoid g = build(parse_expr(expr_text));
    report.arrows = g.size();
    report.units = g.num_units();
    report.full_group_order = full_group_order(g).get_str();

    ValidationReport validation = g.validate();
    if (!validation.ok) {
      ctx.fail("fails validation: " + validation.message);
      return;
    }

    AnalysisOptions options;
    options.max_full_group = spec.full_group_cap;
    std::unique_ptr<RepresentationAnalysis> an;
    try {
      an = std::make_unique<RepresentationAnalysis>(g, options);
    } catch (const CapExceededError&) {
      report.skipped = true;
      ++summary.skipped;
      return;
    }

    ++summary.checked;
    check_structure(g, *an, ctx);
    check_witness(g, ctx);
    check_indicators(g, *an, ctx);
    Rng rng(spec.seed * 0x9E3779B97F4A7C15ULL + member_index + 1);
    check_random_pairs(g, *an, pairs, rng, ctx);
  } catch (const CapExceededError&) {
    report.skipped = true;
    ++summary.skipped;
  } catch (const std::exception& e) {
    ctx.fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

VerifySummary verify_corpus(const std::vector<std::string>& exprs, const CorpusSpec& spec,
                            int pairs) {
  VerifySummary summary;
  summary.seed = spec.seed;
  summary.count = static_cast<int>(exprs.size());
  summary.size_cap = spec.size_cap;
  summary.full_group_cap = spec.full_group_cap;
  summary.pairs = pairs;

  for (std::size_t i = 0; i < exprs.size(); ++i) {
    verify_member(exprs[i], spec, pairs, i, summary);
  }

  if (spec.include_coverage_kernel && spec.count >= 6 &&
      static_cast<int>(exprs.size()) >= 6) {
    static const WitnessKind kAllKinds[] = {
        WitnessKind::TwoLoops,    WitnessKind::ChainedPath, WitnessKind::DisjointPath,
        WitnessKind::LoopApart,   WitnessKind::LoopAtRange, WitnessKind::ParallelPath,
    };
    for (WitnessKind kind : kAllKinds) {
      std::string name = to_string(kind);
      if (summary.witness_kinds.find(name) == summary.witness_kinds.end()) {
        summary.failures.push_back("witness construction never exercised: " + name);
      }
    }
  }
  return summary;
}

VerifySummary run_verify(const CorpusSpec& spec, int pairs) {
  return verify_corpus(generate_corpus(spec), spec, pairs);
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json members_json = nlohmann::json::array();
  for (const MemberReport& m : members) {
    members_json.push_back({{"expr", m.expr},
                            {"arrows", m.arrows},
                            {"units", m.units},
                            {"full_group_order", m.full_group_order},
                            {"skipped", m.skipped},
                            {"injective", m.injective},
                            {"surjective", m.surjective},
                            {"witness_kind", m.witness_kind},
                            {"failures", m.failures}});
  }
  return {{"schema_version", 1},
          {"corpus",
           {{"seed", seed},
            {"count", count},
            {"size_cap", size_cap},
            {"full_group_cap", full_group_cap}}},
          {"pairs", pairs},
          {"checked", checked},
          {"skipped", skipped},
          {"counts",
           {{"injectivity_agreements", injectivity_agreements},
            {"surjectivity_agreements", surjectivity_agreements},
            {"order_formula_agreements", order_formula_agreements},
            {"kernel_checks", kernel_checks},
            {"indicator_membership_checks", indicator_membership_checks},
            {"witness_checks", witness_checks},
            {"pair_checks", pair_checks},
            {"element_checks", element_checks}}},
          {"witness_kinds", witness_kinds},
          {"failures", failures},
          {"members", members_json},
          {"all_ok", all_ok()}};
}

std::string VerifySummary::table() const {
  std::ostringstream out;
  out << "corpus: seed=" << seed << " count=" << count << " size-cap=" << size_cap
      << " full-group-cap=" << full_group_cap << " pairs=" << pairs << "\n";
  out << "  members checked " << checked << ", skipped " << skipped << "\n";
  out << "  injectivity characterization agreements   " << injectivity_agreements << "\n";
  out << "  surjectivity characterization agreements  " << surjectivity_agreements << "\n";
  out << "  order formula vs enumeration              " << order_formula_agreements << "\n";
  out << "  kernel basis certificates                 " << kernel_checks << "\n";
  out << "  indicator membership checks               " << indicator_membership_checks << "\n";
  out << "  witness certificates                      " << witness_checks << "\n";
  out << "  homomorphism-law pair checks              " << pair_checks << "\n";
  out << "  pushforward/row-sum element checks        " << element_checks << "\n";
  out << "  witness kinds:";
  if (witness_kinds.empty()) out << " (none)";
  for (const auto& [kind, n] : witness_kinds) out << " " << kind << "=" << n;
  out << "\n";
  if (all_ok()) {
    out << "  all checks passed\n";
  } else {
    out << "  FAILURES (" << failures.size() << "):\n";
    for (const std::string& f : failures) out << "    " << f << "\n";
  }
  return out.str();
}

}  // namespace fullgroup
