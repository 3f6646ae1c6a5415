#include "fullgroup/random_elements.hpp"

#include <limits>
#include <stdexcept>

namespace fullgroup {

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

GaussianRational random_coefficient(Rng& rng) {
  auto small = [&rng]() {
    long num = static_cast<long>(rng.next_below(9)) - 4;
    long den = static_cast<long>(rng.next_below(3)) + 1;
    return make_rational(num, den);
  };
  Rational re = small();
  Rational im = 0;
  if (rng.chance(1, 4)) im = small();
  GaussianRational c(re, im);
  if (c.is_zero()) return GaussianRational(1);
  return c;
}

SteinbergElement random_steinberg(const FiniteGroupoid& g, Rng& rng, int terms) {
  SteinbergElement f(g);
  for (int t = 0; t < terms; ++t) {
    ArrowId a = static_cast<ArrowId>(rng.next_below(static_cast<std::uint64_t>(g.size())));
    f += SteinbergElement::point_mass(g, a, random_coefficient(rng));
  }
  return f;
}

GroupRingElement random_group_ring(const FiniteGroupoid& g,
                                   const std::vector<FullBisection>& basis, Rng& rng,
                                   int terms) {
  if (basis.empty()) throw std::invalid_argument("random_group_ring: empty basis");
  GroupRingElement x(g);
  for (int t = 0; t < terms; ++t) {
    const FullBisection& U = basis[rng.next_below(basis.size())];
    x.add_term(U, random_coefficient(rng));
  }
  return x;
}

}  // namespace fullgroup
