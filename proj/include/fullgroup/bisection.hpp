#pragma once

#include <gmpxx.h>

#include <vector>

#include "fullgroup/groupoid.hpp"

namespace fullgroup {

/// An arbitrary bisection is just a sorted arrow set whose sources are
/// pairwise distinct and whose ranges are pairwise distinct.
using Bisection = std::vector<ArrowId>;

bool is_bisection(const FiniteGroupoid& g, const Bisection& arrows);

/// Full: the sources exhaust the units (equivalently, so do the ranges).
bool is_full_bisection(const FiniteGroupoid& g, const Bisection& arrows);

/// A full bisection in canonical form (ascending arrow list), pinned to its
/// groupoid.  These are the group elements of the full group: multiplication
/// is the set product { ab : a in A, b in B, s(a) = r(b) }.
///
/// The groupoid is held by reference and must outlive every bisection built
/// over it.
class FullBisection {
 public:
  FullBisection(const FiniteGroupoid& g, std::vector<ArrowId> arrows);

  const std::vector<ArrowId>& arrows() const { return arrows_; }
  const FiniteGroupoid& groupoid() const { return *groupoid_; }

  /// The unique arrow of this bisection with the given source unit.
  ArrowId arrow_with_source(ArrowId unit) const { return by_source_[unit]; }
  bool contains(ArrowId a) const;

  /// Arrow-set comparisons; both sides must live over the same groupoid.
  friend bool operator==(const FullBisection& x, const FullBisection& y) {
    return x.arrows_ == y.arrows_;
  }
  friend bool operator!=(const FullBisection& x, const FullBisection& y) { return !(x == y); }
  friend bool operator<(const FullBisection& x, const FullBisection& y) {
    return x.arrows_ < y.arrows_;
  }

 private:
  const FiniteGroupoid* groupoid_;
  std::vector<ArrowId> arrows_;     // ascending
  std::vector<ArrowId> by_source_;  // unit -> member arrow
};

/// The identity element: the unit space itself.
FullBisection unit_bisection(const FiniteGroupoid& g);

/// Set product; throws std::invalid_argument when the operands live over
/// different groupoids.
FullBisection multiply(const FullBisection& a, const FullBisection& b);

/// Elementwise inverse (the group inverse for the set product).
FullBisection invert_bisection(const FullBisection& a);

/// All full bisections, in ascending order of their arrow lists.  Walks
/// orbit-by-orbit (unit permutation times a choice of connecting arrow per
/// unit) rather than filtering arrow subsets.
std::vector<FullBisection> enumerate_full_bisections(const FiniteGroupoid& g);

/// Group order by the counting formula: over each orbit with k units and
/// isotropy groups of order h, a factor k! * h^k.  Valid groupoid required.
mpz_class full_group_order(const FiniteGroupoid& g);

/// Every bisection, full or not, including the empty one; ascending arrow
/// lists, ordered lexicographically.  Exponential in |G|; capped at |G| <= 16.
std::vector<Bisection> enumerate_bisections(const FiniteGroupoid& g);

}  // namespace fullgroup
