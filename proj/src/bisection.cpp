#include "fullgroup/bisection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fullgroup/errors.hpp"

namespace fullgroup {

bool is_bisection(const FiniteGroupoid& g, const Bisection& arrows) {
  std::vector<char> seen_source(g.num_units(), 0), seen_range(g.num_units(), 0), seen(g.size(), 0);
  for (ArrowId a : arrows) {
    if (a < 0 || a >= g.size() || seen[a]) return false;
    seen[a] = 1;
    if (seen_source[g.source_of(a)] || seen_range[g.range_of(a)]) return false;
    seen_source[g.source_of(a)] = 1;
    seen_range[g.range_of(a)] = 1;
  }
  return true;
}

bool is_full_bisection(const FiniteGroupoid& g, const Bisection& arrows) {
  return static_cast<int>(arrows.size()) == g.num_units() && is_bisection(g, arrows);
}

FullBisection::FullBisection(const FiniteGroupoid& g, std::vector<ArrowId> arrows)
    : groupoid_(&g), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  if (!is_full_bisection(g, arrows_)) {
    throw std::invalid_argument("arrow set is not a full bisection");
  }
  by_source_.assign(g.num_units(), -1);
  for (ArrowId a : arrows_) by_source_[g.source_of(a)] = a;
}

bool FullBisection::contains(ArrowId a) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), a);
}

FullBisection unit_bisection(const FiniteGroupoid& g) {
  std::vector<ArrowId> units(g.num_units());
  for (int u = 0; u < g.num_units(); ++u) units[u] = u;
  return FullBisection(g, std::move(units));
}

FullBisection multiply(const FullBisection& a, const FullBisection& b) {
  if (&a.groupoid() != &b.groupoid()) {
    throw std::invalid_argument("cannot multiply bisections over different groupoids");
  }
  const FiniteGroupoid& g = a.groupoid();
  std::vector<ArrowId> arrows;
  arrows.reserve(g.num_units());
  for (ArrowId beta : b.arrows()) {
    ArrowId alpha = a.arrow_with_source(g.range_of(beta));
    ArrowId ab = g.compose(alpha, beta);
    if (ab < 0) throw std::logic_error("composition undefined inside a bisection product");
    arrows.push_back(ab);
  }
  return FullBisection(g, std::move(arrows));
}

FullBisection invert_bisection(const FullBisection& a) {
  std::vector<ArrowId> arrows;
  arrows.reserve(a.arrows().size());
  for (ArrowId x : a.arrows()) arrows.push_back(a.groupoid().invert(x));
  return FullBisection(a.groupoid(), std::move(arrows));
}

std::vector<FullBisection> enumerate_full_bisections(const FiniteGroupoid& g) {
  OrbitDecomposition od = orbits(g);

  // Within one orbit a full bisection restricts to: a permutation sigma of the
  // orbit's units together with one arrow sigma(v) <- v for each unit v.
  std::vector<std::vector<std::vector<ArrowId>>> orbit_sections;
  for (const auto& orbit : od.orbits) {
    std::vector<std::vector<ArrowId>> sections;
    std::vector<ArrowId> targets = orbit;
    do {
      std::vector<const std::vector<ArrowId>*> choices;
      choices.reserve(orbit.size());
      bool feasible = true;
      for (std::size_t j = 0; j < orbit.size(); ++j) {
        const auto& f = g.fiber(targets[j], orbit[j]);
        if (f.empty()) {
          feasible = false;
          break;
        }
        choices.push_back(&f);
      }
      if (!feasible) continue;
      std::vector<std::size_t> idx(orbit.size(), 0);
      while (true) {
        std::vector<ArrowId> section(orbit.size());
        for (std::size_t j = 0; j < orbit.size(); ++j) section[j] = (*choices[j])[idx[j]];
        sections.push_back(std::move(section));
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
          if (++idx[j] < choices[j]->size()) break;
          idx[j] = 0;
        }
        if (j == idx.size()) break;
      }
    } while (std::next_permutation(targets.begin(), targets.end()));
    if (sections.empty()) return {};  // only possible on broken structures
    orbit_sections.push_back(std::move(sections));
  }

  std::vector<FullBisection> out;
  std::vector<std::size_t> idx(orbit_sections.size(), 0);
  while (true) {
    std::vector<ArrowId> arrows;
    arrows.reserve(g.num_units());
    for (std::size_t o = 0; o < orbit_sections.size(); ++o) {
      const auto& section = orbit_sections[o][idx[o]];
      arrows.insert(arrows.end(), section.begin(), section.end());
    }
    out.emplace_back(g, std::move(arrows));
    std::size_t o = 0;
    for (; o < idx.size(); ++o) {
      if (++idx[o] < orbit_sections[o].size()) break;
      idx[o] = 0;
    }
    if (o == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class full_group_order(const FiniteGroupoid& g) {
  OrbitDecomposition od = orbits(g);
  mpz_class order = 1;
  for (std::size_t o = 0; o < od.orbits.size(); ++o) {
    const auto k = od.orbits[o].size();
    const auto h = od.isotropy_order[o];
    for (std::size_t j = 2; j <= k; ++j) order *= static_cast<unsigned long>(j);
    for (std::size_t j = 0; j < k; ++j) order *= static_cast<unsigned long>(h);
  }
  return order;
}

std::vector<Bisection> enumerate_bisections(const FiniteGroupoid& g) {
  if (g.size() > 16) {
    throw CapExceededError("all-bisection enumeration capped at 16 arrows");
  }
  std::vector<Bisection> out;
  std::vector<ArrowId> current;
  std::vector<char> used_range(g.num_units(), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.num_units()) {
      out.push_back(current);
      return;
    }
    rec(v + 1);  // no arrow with source v
    for (ArrowId a : g.source_fiber(v)) {
      int u = g.range_of(a);
      if (used_range[u]) continue;
      used_range[u] = 1;
      current.push_back(a);
      rec(v + 1);
      current.pop_back();
      used_range[u] = 0;
    }
  };
  rec(0);
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fullgroup
