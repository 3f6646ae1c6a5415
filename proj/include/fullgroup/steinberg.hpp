#pragma once

#include <map>
#include <span>
#include <vector>

#include "fullgroup/bisection.hpp"
#include "fullgroup/groupoid.hpp"
#include "fullgroup/matrix.hpp"
#include "fullgroup/scalar.hpp"

namespace fullgroup {

/// An element of the convolution algebra of a finite discrete groupoid: a
/// function from arrows to exact complex scalars, stored densely.  The product
/// is convolution, (f * g)(c) = sum over a b = c of f(a) g(b); the involution
/// is f^*(c) = conj(f(c^{-1})).
class SteinbergElement {
 public:
  explicit SteinbergElement(const FiniteGroupoid& g)
      : groupoid_(&g), values_(static_cast<std::size_t>(g.size())) {}

  /// Indicator function 1_S of an arrow set.
  static SteinbergElement indicator(const FiniteGroupoid& g, std::span<const ArrowId> arrows);
  /// c * 1_{a}.
  static SteinbergElement point_mass(const FiniteGroupoid& g, ArrowId a,
                                     GaussianRational c = GaussianRational(1));
  /// The multiplicative identity 1_{G0}.
  static SteinbergElement unit_indicator(const FiniteGroupoid& g);

  const FiniteGroupoid& groupoid() const { return *groupoid_; }

  GaussianRational& operator[](ArrowId a) { return values_[a]; }
  const GaussianRational& operator[](ArrowId a) const { return values_[a]; }

  bool is_zero() const;
  /// Arrows with nonzero coefficient, ascending.
  std::vector<ArrowId> support() const;

  SteinbergElement& operator+=(const SteinbergElement& o);
  SteinbergElement& operator-=(const SteinbergElement& o);
  SteinbergElement& operator*=(const GaussianRational& c);

  friend SteinbergElement operator+(SteinbergElement a, const SteinbergElement& b) {
    return a += b;
  }
  friend SteinbergElement operator-(SteinbergElement a, const SteinbergElement& b) {
    return a -= b;
  }
  friend SteinbergElement operator*(const GaussianRational& c, SteinbergElement a) {
    return a *= c;
  }
  friend bool operator==(const SteinbergElement& a, const SteinbergElement& b);
  friend bool operator!=(const SteinbergElement& a, const SteinbergElement& b) {
    return !(a == b);
  }

 private:
  const FiniteGroupoid* groupoid_;
  std::vector<GaussianRational> values_;
};

/// Convolution product.
SteinbergElement convolve(const SteinbergElement& f, const SteinbergElement& g);

/// The *-involution.
SteinbergElement involute(const SteinbergElement& f);

/// Pushforward of f along the range map: a function on units,
/// (r_* f)(u) = sum of f over arrows with range u, returned as an element
/// supported on the unit arrows.
SteinbergElement r_star(const SteinbergElement& f);

/// Pushforward along the source map.
SteinbergElement s_star(const SteinbergElement& f);

/// s_* - r_*; vanishes on the image of the group-ring representation.
SteinbergElement delta1(const SteinbergElement& f);

/// Element of the complex group ring of the full group: a finite formal
/// combination of full bisections.  Multiplication is induced by the set
/// product, the involution by elementwise inversion plus conjugation.
class GroupRingElement {
 public:
  explicit GroupRingElement(const FiniteGroupoid& g) : groupoid_(&g) {}

  const FiniteGroupoid& groupoid() const { return *groupoid_; }

  /// Adds c * [U]; terms with coefficient zero are dropped.
  GroupRingElement& add_term(const FullBisection& U, const GaussianRational& c);

  const std::map<FullBisection, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const GaussianRational& c);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GaussianRational& c, GroupRingElement a) {
    return a *= c;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
    return !(a == b);
  }

  /// The *-involution: conjugate coefficients on inverted bisections.
  GroupRingElement star() const;

 private:
  const FiniteGroupoid* groupoid_;
  std::map<FullBisection, GaussianRational> terms_;
};

/// The generator [U] of the group ring.
GroupRingElement delta(const FullBisection& U);

/// The canonical representation into the convolution algebra:
/// [U] goes to the indicator 1_U, extended linearly.
SteinbergElement pi(const GroupRingElement& x);

/// The fiber-sum matrix of f: entry (i, j) is the sum of f over arrows from
/// unit j to unit i.  A *-homomorphism into complex matrices.
ComplexMatrix t_matrix(const SteinbergElement& f);

/// Splits f into its fiber components f_{i,j} (f restricted to arrows
/// from unit j to unit i); returned row-major, i * num_units + j.
std::vector<SteinbergElement> decompose_fibers(const SteinbergElement& f);

}  // namespace fullgroup
