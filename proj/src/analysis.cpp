#include "fullgroup/analysis.hpp"

#include <stdexcept>
#include <utility>

#include "fullgroup/errors.hpp"

namespace fullgroup {

InjectivityVerdict injective_by_theorem(const FiniteGroupoid& g) {
  if (is_all_isotropy(g)) {
    int k = nontrivial_isotropy_count(g);
    if (k <= 1) {
      return {true,
              "every arrow is isotropy and at most one unit carries a nontrivial isotropy group"};
    }
    return {false, "every arrow is isotropy and " + std::to_string(k) +
                       " units carry nontrivial isotropy groups"};
  }
  int nonunits = g.nonunit_count();
  if (nonunits < 3) {
    return {true, "some arrow moves a unit and there are only " + std::to_string(nonunits) +
                      " non-unit arrows"};
  }
  return {false, "some arrow moves a unit and there are " + std::to_string(nonunits) +
                     " non-unit arrows"};
}

bool surjective_by_theorem(const FiniteGroupoid& g) { return g.num_units() == 1; }

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::TwoLoops: return "two-loops";
    case WitnessKind::ChainedPath: return "chained-path";
    case WitnessKind::DisjointPath: return "disjoint-path";
    case WitnessKind::LoopApart: return "loop-apart";
    case WitnessKind::LoopAtRange: return "loop-at-range";
    case WitnessKind::ParallelPath: return "parallel-path";
  }
  return "?";
}

namespace {

// Completes a partial bisection to a full one by adjoining every unit it does
// not already touch.  All witness building blocks have matching source and
// range unit sets, so this yields a genuine full bisection (the constructor
// re-checks).
FullBisection with_unit_padding(const FiniteGroupoid& g, std::vector<ArrowId> arrows) {
  std::vector<char> covered(g.num_units(), 0);
  for (ArrowId a : arrows) covered[g.source_of(a)] = 1;
  for (int u = 0; u < g.num_units(); ++u) {
    if (!covered[u]) arrows.push_back(u);
  }
  return FullBisection(g, std::move(arrows));
}

Witness two_loops_witness(const FiniteGroupoid& g) {
  // Two different units with nontrivial isotropy; one non-unit loop at each.
  ArrowId loop1 = -1, loop2 = -1;
  for (int u = 0; u < g.num_units() && loop2 < 0; ++u) {
    for (ArrowId a : g.fiber(u, u)) {
      if (g.is_unit(a)) continue;
      (loop1 < 0 ? loop1 : loop2) = a;
      break;
    }
  }
  if (loop2 < 0) throw std::logic_error("two-loops witness requested without two isotropy units");

  GroupRingElement a(g);
  a.add_term(with_unit_padding(g, {loop1}), 1);
  a.add_term(with_unit_padding(g, {loop2}), 1);
  a.add_term(with_unit_padding(g, {loop1, loop2}), -1);
  a.add_term(unit_bisection(g), -1);
  return {std::move(a), WitnessKind::TwoLoops, WitnessKind::TwoLoops, loop1, loop2};
}

}  // namespace

Witness noninjectivity_witness(const FiniteGroupoid& g) {
  InjectivityVerdict verdict = injective_by_theorem(g);
  if (verdict.injective) {
    throw std::invalid_argument("no noninjectivity witness exists: " + verdict.reason +
                                ", so the representation is injective");
  }

  Witness witness = [&]() -> Witness {
    if (is_all_isotropy(g)) return two_loops_witness(g);

    // First pair (g1, g2), ordered lexicographically, with g1 any non-unit,
    // g2 moving a unit, g1 not g2 and not its inverse.
    ArrowId g1 = -1, g2 = -1;
    for (ArrowId c1 = g.num_units(); c1 < g.size() && g2 < 0; ++c1) {
      for (ArrowId c2 = g.num_units(); c2 < g.size(); ++c2) {
        if (g.range_of(c2) == g.source_of(c2)) continue;
        if (c2 == c1 || c2 == g.invert(c1)) continue;
        g1 = c1;
        g2 = c2;
        break;
      }
    }
    if (g2 < 0) throw std::logic_error("witness pair not found in a noninjective groupoid");

    ArrowId a1 = g1, a2 = g2;
    WitnessKind kind;
    if (g.range_of(a1) == g.source_of(a1)) {
      ArrowId w = g.source_of(a1);
      if (g.range_of(a2) == w) {
        kind = WitnessKind::LoopAtRange;
      } else if (g.source_of(a2) == w) {
        a2 = g.invert(a2);
        kind = WitnessKind::LoopAtRange;
      } else {
        kind = WitnessKind::LoopApart;
      }
    } else {
      ArrowId r1 = g.range_of(a1), s1 = g.source_of(a1);
      ArrowId r2 = g.range_of(a2), s2 = g.source_of(a2);
      bool shares_r1 = r1 == r2 || r1 == s2;
      bool shares_s1 = s1 == r2 || s1 == s2;
      if (!shares_r1 && !shares_s1) {
        kind = WitnessKind::DisjointPath;
      } else if (shares_r1 && shares_s1) {
        kind = WitnessKind::ParallelPath;
        if (r2 == r1) a2 = g.invert(a2);  // orient head-to-tail both ways round
      } else {
        kind = WitnessKind::ChainedPath;
        if (s1 == r2) {
          // already source(a1) = range(a2)
        } else if (r1 == r2) {
          a1 = g.invert(a1);
        } else if (s1 == s2) {
          a2 = g.invert(a2);
        } else {  // r1 == s2
          a1 = g.invert(a1);
          a2 = g.invert(a2);
        }
      }
    }

    WitnessKind initial = kind;
    if (kind == WitnessKind::ParallelPath) {
      // a1 and a2 now run between the same two units in opposite directions;
      // their composite is a non-unit loop at range(a2), which hands the pair
      // to the loop-at-range construction.
      a1 = g.compose(a2, a1);
      kind = WitnessKind::LoopAtRange;
    }

    GroupRingElement a(g);
    switch (kind) {
      case WitnessKind::LoopApart: {
        a.add_term(with_unit_padding(g, {a2, g.invert(a2)}), 1);
        a.add_term(with_unit_padding(g, {a1}), 1);
        a.add_term(with_unit_padding(g, {a1, a2, g.invert(a2)}), -1);
        a.add_term(unit_bisection(g), -1);
        break;
      }
      case WitnessKind::LoopAtRange: {
        ArrowId p = g.compose(a1, a2);
        a.add_term(with_unit_padding(g, {a2, g.invert(p)}), 1);
        a.add_term(with_unit_padding(g, {p, g.invert(a2)}), 1);
        a.add_term(with_unit_padding(g, {a2, g.invert(a2)}), -1);
        a.add_term(with_unit_padding(g, {p, g.invert(p)}), -1);
        break;
      }
      case WitnessKind::DisjointPath: {
        a.add_term(with_unit_padding(g, {a1, g.invert(a1)}), 1);
        a.add_term(with_unit_padding(g, {a2, g.invert(a2)}), 1);
        a.add_term(with_unit_padding(g, {a1, g.invert(a1), a2, g.invert(a2)}), -1);
        a.add_term(unit_bisection(g), -1);
        break;
      }
      case WitnessKind::ChainedPath: {
        ArrowId p = g.compose(a1, a2);
        a.add_term(with_unit_padding(g, {a1, a2, g.invert(p)}), 1);
        a.add_term(with_unit_padding(g, {g.invert(a1), g.invert(a2), p}), 1);
        a.add_term(with_unit_padding(g, {a1, g.invert(a1)}), -1);
        a.add_term(with_unit_padding(g, {a2, g.invert(a2)}), -1);
        a.add_term(with_unit_padding(g, {p, g.invert(p)}), -1);
        a.add_term(unit_bisection(g), 1);
        break;
      }
      default:
        throw std::logic_error("unreachable witness kind");
    }
    return {std::move(a), kind, initial, g1, g2};
  }();

  if (witness.element.is_zero()) {
    throw std::logic_error("witness construction collapsed to zero");
  }
  if (!pi(witness.element).is_zero()) {
    throw std::logic_error("witness construction is not killed by the representation");
  }
  return witness;
}

ComplexMatrix pi_matrix(const FiniteGroupoid& g, const std::vector<FullBisection>& basis) {
  ComplexMatrix m(static_cast<std::size_t>(g.size()), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (ArrowId a : basis[j].arrows()) m.at(a, j) = 1;
  }
  return m;
}

RepresentationAnalysis::RepresentationAnalysis(const FiniteGroupoid& g, AnalysisOptions options)
    : groupoid_(&g), order_(fullgroup::full_group_order(g)) {
  if (cmp(order_, options.max_full_group) > 0) {
    throw CapExceededError("full group too large to enumerate: order " + order_.get_str() +
                           " exceeds the cap " + std::to_string(options.max_full_group));
  }
  full_group_ = enumerate_full_bisections(g);
  solver_ = std::make_unique<LinearSolver>(pi_matrix(g, full_group_));
}

std::vector<GroupRingElement> RepresentationAnalysis::kernel_basis() const {
  std::vector<GroupRingElement> out;
  for (const auto& vec : solver_->kernel()) out.push_back(from_coefficients(vec));
  return out;
}

Membership RepresentationAnalysis::membership(const SteinbergElement& f) const {
  if (&f.groupoid() != groupoid_) {
    throw std::invalid_argument("element lives over a different groupoid");
  }
  std::vector<GaussianRational> b(static_cast<std::size_t>(groupoid_->size()));
  for (int a = 0; a < groupoid_->size(); ++a) b[a] = f[a];
  auto x = solver_->solve(b);
  if (!x) return {false, std::nullopt};
  return {true, std::move(x)};
}

GroupRingElement RepresentationAnalysis::from_coefficients(
    const std::vector<GaussianRational>& coeffs) const {
  if (coeffs.size() != full_group_.size()) {
    throw std::invalid_argument("coefficient vector does not match the full-group basis");
  }
  GroupRingElement x(*groupoid_);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) x.add_term(full_group_[j], coeffs[j]);
  }
  return x;
}

std::vector<GroupRingElement> kernel_basis(const FiniteGroupoid& g, AnalysisOptions options) {
  return RepresentationAnalysis(g, options).kernel_basis();
}

std::size_t image_dimension(const FiniteGroupoid& g, AnalysisOptions options) {
  return RepresentationAnalysis(g, options).image_dimension();
}

Membership membership_in_image(const FiniteGroupoid& g, const SteinbergElement& f,
                               AnalysisOptions options) {
  return RepresentationAnalysis(g, options).membership(f);
}

bool dense_in_full_algebra(const FiniteGroupoid& g, AnalysisOptions options) {
  return image_dimension(g, options) == static_cast<std::size_t>(g.size());
}

AnalysisReport analyze(const FiniteGroupoid& g, AnalysisOptions options, bool want_witness) {
  ValidationReport validation = g.validate();
  if (!validation.ok) {
    throw std::invalid_argument("groupoid fails validation: " + validation.message);
  }
  RepresentationAnalysis analysis(g, options);

  AnalysisReport report;
  report.arrows = g.size();
  report.units = g.num_units();
  report.orbit_count = static_cast<int>(orbits(g).orbits.size());
  report.all_isotropy = is_all_isotropy(g);
  report.nontrivial_isotropy = nontrivial_isotropy_count(g);
  report.is_group = g.num_units() == 1;
  report.full_group_order = analysis.full_group_order();
  report.steinberg_dimension = static_cast<std::size_t>(g.size());
  report.image_dimension = analysis.image_dimension();
  report.kernel_dimension = analysis.kernel_dimension();
  report.injectivity = injective_by_theorem(g);
  report.injective_oracle = report.kernel_dimension == 0;
  report.surjective_theorem = surjective_by_theorem(g);
  report.surjective_oracle = report.image_dimension == report.steinberg_dimension;
  report.dense_in_full_algebra = report.surjective_oracle;
  report.isomorphism = report.injective_oracle && report.surjective_oracle;
  report.oracles_agree_with_theorems =
      report.injective_oracle == report.injectivity.injective &&
      report.surjective_oracle == report.surjective_theorem &&
      report.dense_in_full_algebra == report.is_group;
  if (want_witness && !report.injective_oracle) {
    report.witness = noninjectivity_witness(g);
  }
  return report;
}

}  // namespace fullgroup
