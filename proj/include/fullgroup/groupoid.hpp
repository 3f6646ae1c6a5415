#pragma once

#include <string>
#include <vector>

namespace fullgroup {

/// Arrows are dense indices 0..size()-1; units always come first (0..num_units()-1).
using ArrowId = int;

/// Outcome of the axiom check.  A failed check is data, not an exception:
/// `message` names the first violated axiom and `witnesses` the arrows involved.
struct ValidationReport {
  bool ok = true;
  std::string message;
  std::vector<ArrowId> witnesses;
};

/// A finite groupoid given by complete structure tables: range, source,
/// inverse per arrow and an explicit composition table (-1 where undefined).
///
/// Construction only enforces representation well-formedness (indices in
/// range, units first, range/source land in units); the algebraic axioms are
/// checked by validate() so that deliberately broken structures can be built
/// and inspected.  All the named constructors (groups, pair groupoids,
/// unions, products) produce structures that pass validate().
class FiniteGroupoid {
 public:
  FiniteGroupoid(int num_units, std::vector<ArrowId> range, std::vector<ArrowId> source,
                 std::vector<ArrowId> inverse, std::vector<int> compose_table,
                 std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(range_.size()); }
  int num_units() const { return num_units_; }
  int nonunit_count() const { return size() - num_units_; }
  bool is_unit(ArrowId a) const { return a < num_units_; }

  ArrowId range_of(ArrowId a) const { return range_[a]; }
  ArrowId source_of(ArrowId a) const { return source_[a]; }
  ArrowId invert(ArrowId a) const { return inverse_[a]; }
  bool composable(ArrowId a, ArrowId b) const { return source_[a] == range_[b]; }
  /// Table lookup; -1 when the table has no entry for (a, b).
  ArrowId compose(ArrowId a, ArrowId b) const { return compose_[a * size() + b]; }

  /// All arrows with range u and source v (the (u,v) fiber), ascending.
  const std::vector<ArrowId>& fiber(ArrowId u, ArrowId v) const;
  /// All arrows with range u, ascending.
  const std::vector<ArrowId>& range_fiber(ArrowId u) const;
  /// All arrows with source v, ascending.
  const std::vector<ArrowId>& source_fiber(ArrowId v) const;

  const std::string& label(ArrowId a) const { return labels_[a]; }
  /// Index of the arrow with this label, or -1.
  ArrowId arrow_by_label(const std::string& label) const;

  /// Raw tables, exposed for serialization and for building mutated copies.
  const std::vector<ArrowId>& range_vector() const { return range_; }
  const std::vector<ArrowId>& source_vector() const { return source_; }
  const std::vector<ArrowId>& inverse_vector() const { return inverse_; }
  const std::vector<int>& compose_table() const { return compose_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Checks the groupoid axioms; reports the first violation found.
  ValidationReport validate() const;

 private:
  int num_units_;
  std::vector<ArrowId> range_, source_, inverse_;
  std::vector<int> compose_;  // size() * size(), row-major, -1 = undefined
  std::vector<std::string> labels_;
  // Fibers precomputed from range_/source_ alone.
  std::vector<std::vector<ArrowId>> fibers_;         // num_units^2, row-major (u, v)
  std::vector<std::vector<ArrowId>> range_fibers_;   // per unit
  std::vector<std::vector<ArrowId>> source_fibers_;  // per unit
};

/// Groupoid with a single unit, from a group multiplication table.
/// `table[i][j]` is the product; the identity is remapped to index 0.
/// Throws std::invalid_argument when the table is not a group.
FiniteGroupoid make_group(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> labels = {});

/// Cyclic group of order n >= 1; elements labelled e, g, g2, ...
FiniteGroupoid make_cyclic_group(int n);

/// Symmetric group on n letters (n! arrows), permutations in lexicographic
/// one-line order, composed as functions: (p*q)(x) = p(q(x)).
FiniteGroupoid make_symmetric_group(int n);

/// Pair groupoid on k units: exactly one arrow u <- v for every ordered pair.
FiniteGroupoid make_pair_groupoid(int k);

/// Disjoint union; arrows keep their identity, labels become "(x,1)"/"(x,2)".
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Direct product; arrows are pairs, composed componentwise, labels "(x,y)".
FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Connected components of the unit space under "some arrow joins u and v".
struct OrbitDecomposition {
  std::vector<std::vector<ArrowId>> orbits;  // unit ids, each ascending; sorted by first unit
  std::vector<std::size_t> isotropy_order;   // |G^u_u| at each orbit's first unit
};

OrbitDecomposition orbits(const FiniteGroupoid& g);

/// All arrows with range == source, ascending (includes every unit).
std::vector<ArrowId> isotropy(const FiniteGroupoid& g);

/// True when every arrow is an isotropy arrow.
bool is_all_isotropy(const FiniteGroupoid& g);

/// Number of units whose isotropy group has more than one element.
int nontrivial_isotropy_count(const FiniteGroupoid& g);

}  // namespace fullgroup
