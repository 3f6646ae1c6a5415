#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fullgroup/bisection.hpp"
#include "fullgroup/groupoid.hpp"
#include "fullgroup/linalg.hpp"
#include "fullgroup/steinberg.hpp"

namespace fullgroup {

struct AnalysisOptions {
  /// Largest full group the analysis will enumerate; beyond this the
  /// constructor throws CapExceededError.
  std::size_t max_full_group = 5000;
};

/// Cheap structural predicate: is the representation of the group ring in the
/// convolution algebra injective?  Decided from the characterization --
/// either every arrow is isotropy and at most one unit carries a nontrivial
/// isotropy group, or some arrow moves a unit and there are at most two
/// non-unit arrows.  `reason` spells the deciding condition out.
struct InjectivityVerdict {
  bool injective = false;
  std::string reason;
};

InjectivityVerdict injective_by_theorem(const FiniteGroupoid& g);

/// Structural predicate for surjectivity: the representation is onto exactly
/// when the groupoid is a group (a single unit).
bool surjective_by_theorem(const FiniteGroupoid& g);

/// How a noninjectivity witness was built.  `TwoLoops` is the all-isotropy
/// construction; the others start from a pair (g1, g2) with g2 moving a unit
/// and are named by the unit pattern of the pair after normalization:
///   DisjointPath   -- g1 not isotropy, its units disjoint from g2's
///   LoopApart      -- g1 an isotropy loop away from g2
///   LoopAtRange    -- g1 an isotropy loop at the range of g2
///   ChainedPath    -- g1 not isotropy, source of g1 = range of g2, one shared unit
///   ParallelPath   -- g1, g2 connect the same two units (reduced to LoopAtRange)
enum class WitnessKind { TwoLoops, ChainedPath, DisjointPath, LoopApart, LoopAtRange, ParallelPath };

std::string to_string(WitnessKind kind);

/// A certified nonzero element of the group ring that the representation
/// kills.  gamma1/gamma2 are the generating arrows before normalization.
struct Witness {
  GroupRingElement element;
  WitnessKind kind;            // construction actually used (after reduction)
  WitnessKind initial_kind;    // pattern of the pair as first selected
  ArrowId gamma1 = -1, gamma2 = -1;
};

/// Builds a witness for a groupoid whose representation is not injective.
/// Throws std::invalid_argument when the representation is injective, and
/// std::logic_error if the constructed element fails its own certificate
/// (nonzero in the group ring, zero image) -- which would be a bug.
Witness noninjectivity_witness(const FiniteGroupoid& g);

/// The representation as a matrix: one column per full bisection (in
/// enumeration order), one row per arrow; column U is the 0/1 vector of 1_U.
ComplexMatrix pi_matrix(const FiniteGroupoid& g, const std::vector<FullBisection>& basis);

struct Membership {
  bool member = false;
  /// Coefficients over the full-bisection basis when member.
  std::optional<std::vector<GaussianRational>> coefficients;
};

/// Everything the exact oracles can say about one groupoid's representation.
/// Enumerates the full group once and factorizes the representation matrix
/// once; the per-query operations reuse that work.
class RepresentationAnalysis {
 public:
  explicit RepresentationAnalysis(const FiniteGroupoid& g, AnalysisOptions options = {});

  const FiniteGroupoid& groupoid() const { return *groupoid_; }
  const std::vector<FullBisection>& full_group() const { return full_group_; }
  const mpz_class& full_group_order() const { return order_; }

  std::size_t image_dimension() const { return solver_->rank(); }
  std::size_t kernel_dimension() const { return full_group_.size() - solver_->rank(); }

  /// Kernel of the representation, as group-ring elements; canonical basis.
  std::vector<GroupRingElement> kernel_basis() const;

  /// Is f a linear combination of indicators of full bisections?
  Membership membership(const SteinbergElement& f) const;

  /// Reconstructs a group-ring element from basis coefficients.
  GroupRingElement from_coefficients(const std::vector<GaussianRational>& coeffs) const;

 private:
  const FiniteGroupoid* groupoid_;
  std::vector<FullBisection> full_group_;
  mpz_class order_;
  std::unique_ptr<LinearSolver> solver_;
};

/// One-shot wrappers around RepresentationAnalysis.
std::vector<GroupRingElement> kernel_basis(const FiniteGroupoid& g, AnalysisOptions options = {});
std::size_t image_dimension(const FiniteGroupoid& g, AnalysisOptions options = {});
Membership membership_in_image(const FiniteGroupoid& g, const SteinbergElement& f,
                               AnalysisOptions options = {});

/// Span-level density of the image in the full algebra (equivalently, in the
/// enveloping operator algebra -- all norms agree in finite dimension):
/// true exactly when the image is the whole convolution algebra.
bool dense_in_full_algebra(const FiniteGroupoid& g, AnalysisOptions options = {});

/// The full report the CLI prints.
struct AnalysisReport {
  int arrows = 0;
  int units = 0;
  int orbit_count = 0;
  bool all_isotropy = false;
  int nontrivial_isotropy = 0;
  bool is_group = false;
  mpz_class full_group_order;
  std::size_t steinberg_dimension = 0;
  std::size_t image_dimension = 0;
  std::size_t kernel_dimension = 0;
  InjectivityVerdict injectivity;       // structural characterization
  bool injective_oracle = false;        // kernel_dimension == 0
  bool surjective_theorem = false;
  bool surjective_oracle = false;       // image_dimension == arrows
  bool dense_in_full_algebra = false;
  bool isomorphism = false;
  bool oracles_agree_with_theorems = false;
  std::optional<Witness> witness;
};

/// Runs the exact oracles and the structural predicates side by side.
/// Throws std::invalid_argument when the groupoid fails validate().
/// `want_witness` additionally constructs a noninjectivity witness when the
/// representation is not injective.
AnalysisReport analyze(const FiniteGroupoid& g, AnalysisOptions options = {},
                       bool want_witness = false);

}  // namespace fullgroup
