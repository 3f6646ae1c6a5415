#include "fullgroup/steinberg.hpp"

#include <stdexcept>

namespace fullgroup {

namespace {

void require_same_groupoid(const FiniteGroupoid* a, const FiniteGroupoid* b) {
  if (a != b) throw std::invalid_argument("elements live over different groupoids");
}

}  // namespace

SteinbergElement SteinbergElement::indicator(const FiniteGroupoid& g,
                                             std::span<const ArrowId> arrows) {
  SteinbergElement f(g);
  for (ArrowId a : arrows) {
    if (a < 0 || a >= g.size()) throw std::invalid_argument("indicator arrow out of range");
    f.values_[a] = 1;
  }
  return f;
}

SteinbergElement SteinbergElement::point_mass(const FiniteGroupoid& g, ArrowId a,
                                              GaussianRational c) {
  SteinbergElement f(g);
  if (a < 0 || a >= g.size()) throw std::invalid_argument("point mass arrow out of range");
  f.values_[a] = std::move(c);
  return f;
}

SteinbergElement SteinbergElement::unit_indicator(const FiniteGroupoid& g) {
  SteinbergElement f(g);
  for (int u = 0; u < g.num_units(); ++u) f.values_[u] = 1;
  return f;
}

bool SteinbergElement::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<ArrowId> SteinbergElement::support() const {
  std::vector<ArrowId> out;
  for (int a = 0; a < groupoid_->size(); ++a) {
    if (!values_[a].is_zero()) out.push_back(a);
  }
  return out;
}

SteinbergElement& SteinbergElement::operator+=(const SteinbergElement& o) {
  require_same_groupoid(groupoid_, o.groupoid_);
  for (std::size_t a = 0; a < values_.size(); ++a) values_[a] += o.values_[a];
  return *this;
}

SteinbergElement& SteinbergElement::operator-=(const SteinbergElement& o) {
  require_same_groupoid(groupoid_, o.groupoid_);
  for (std::size_t a = 0; a < values_.size(); ++a) values_[a] -= o.values_[a];
  return *this;
}

SteinbergElement& SteinbergElement::operator*=(const GaussianRational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const SteinbergElement& a, const SteinbergElement& b) {
  require_same_groupoid(a.groupoid_, b.groupoid_);
  return a.values_ == b.values_;
}

SteinbergElement convolve(const SteinbergElement& f, const SteinbergElement& g) {
  if (&f.groupoid() != &g.groupoid()) {
    throw std::invalid_argument("elements live over different groupoids");
  }
  const FiniteGroupoid& gpd = f.groupoid();
  SteinbergElement out(gpd);
  for (int a = 0; a < gpd.size(); ++a) {
    if (f[a].is_zero()) continue;
    for (ArrowId b : gpd.range_fiber(gpd.source_of(a))) {
      if (g[b].is_zero()) continue;
      ArrowId ab = gpd.compose(a, b);
      if (ab < 0) throw std::logic_error("composition undefined during convolution");
      out[ab] += f[a] * g[b];
    }
  }
  return out;
}

SteinbergElement involute(const SteinbergElement& f) {
  const FiniteGroupoid& gpd = f.groupoid();
  SteinbergElement out(gpd);
  for (int a = 0; a < gpd.size(); ++a) out[a] = f[gpd.invert(a)].conj();
  return out;
}

SteinbergElement r_star(const SteinbergElement& f) {
  const FiniteGroupoid& gpd = f.groupoid();
  SteinbergElement out(gpd);
  for (int a = 0; a < gpd.size(); ++a) out[gpd.range_of(a)] += f[a];
  return out;
}

SteinbergElement s_star(const SteinbergElement& f) {
  const FiniteGroupoid& gpd = f.groupoid();
  SteinbergElement out(gpd);
  for (int a = 0; a < gpd.size(); ++a) out[gpd.source_of(a)] += f[a];
  return out;
}

SteinbergElement delta1(const SteinbergElement& f) { return s_star(f) - r_star(f); }

GroupRingElement& GroupRingElement::add_term(const FullBisection& U, const GaussianRational& c) {
  require_same_groupoid(groupoid_, &U.groupoid());
  auto it = terms_.find(U);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(U, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same_groupoid(groupoid_, o.groupoid_);
  for (const auto& [U, c] : o.terms_) add_term(U, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  require_same_groupoid(groupoid_, o.groupoid_);
  for (const auto& [U, c] : o.terms_) add_term(U, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [U, coeff] : terms_) coeff *= c;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_groupoid(&a.groupoid(), &b.groupoid());
  GroupRingElement out(a.groupoid());
  for (const auto& [U, cu] : a.terms()) {
    for (const auto& [V, cv] : b.terms()) {
      out.add_term(multiply(U, V), cu * cv);
    }
  }
  return out;
}

GroupRingElement GroupRingElement::star() const {
  GroupRingElement out(*groupoid_);
  for (const auto& [U, c] : terms_) out.add_term(invert_bisection(U), c.conj());
  return out;
}

GroupRingElement delta(const FullBisection& U) {
  GroupRingElement x(U.groupoid());
  x.add_term(U, GaussianRational(1));
  return x;
}

SteinbergElement pi(const GroupRingElement& x) {
  SteinbergElement out(x.groupoid());
  for (const auto& [U, c] : x.terms()) {
    for (ArrowId a : U.arrows()) out[a] += c;
  }
  return out;
}

ComplexMatrix t_matrix(const SteinbergElement& f) {
  const FiniteGroupoid& g = f.groupoid();
  const std::size_t n = static_cast<std::size_t>(g.num_units());
  ComplexMatrix m(n, n);
  for (int a = 0; a < g.size(); ++a) {
    if (!f[a].is_zero()) m.at(g.range_of(a), g.source_of(a)) += f[a];
  }
  return m;
}

std::vector<SteinbergElement> decompose_fibers(const SteinbergElement& f) {
  const FiniteGroupoid& g = f.groupoid();
  const std::size_t n = static_cast<std::size_t>(g.num_units());
  std::vector<SteinbergElement> out(n * n, SteinbergElement(g));
  for (int a = 0; a < g.size(); ++a) {
    if (!f[a].is_zero()) {
      out[static_cast<std::size_t>(g.range_of(a)) * n + g.source_of(a)][a] = f[a];
    }
  }
  return out;
}

}  // namespace fullgroup
