#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fullgroup/expr.hpp"
#include "fullgroup/random_elements.hpp"
#include "fullgroup/steinberg.hpp"

using namespace fullgroup;

namespace {

FiniteGroupoid from(const std::string& text) { return build(parse_expr(text)); }

SteinbergElement indicator_of(const FullBisection& u) {
  return SteinbergElement::indicator(u.groupoid(), u.arrows());
}

}  // namespace

TEST_CASE("convolution of full-bisection indicators tracks the set product") {
  for (const char* text : {"pair:3", "union(group:cyclic:2,group:cyclic:2)",
                           "product(pair:2,group:cyclic:2)"}) {
    CAPTURE(text);
    FiniteGroupoid g = from(text);
    std::vector<FullBisection> elements = enumerate_full_bisections(g);
    for (const FullBisection& u : elements) {
      for (const FullBisection& v : elements) {
        CHECK(convolve(indicator_of(u), indicator_of(v)) == indicator_of(multiply(u, v)));
      }
      CHECK(involute(indicator_of(u)) == indicator_of(invert_bisection(u)));
    }
  }
}

TEST_CASE("point masses convolve along the composition table") {
  FiniteGroupoid g = from("pair:3");
  ArrowId a01 = g.arrow_by_label("a0_1");
  ArrowId a12 = g.arrow_by_label("a1_2");
  ArrowId a02 = g.arrow_by_label("a0_2");

  CHECK(convolve(SteinbergElement::point_mass(g, a01), SteinbergElement::point_mass(g, a12)) ==
        SteinbergElement::point_mass(g, a02));
  // Non-composable pair convolves to zero.
  CHECK(convolve(SteinbergElement::point_mass(g, a01), SteinbergElement::point_mass(g, a02))
            .is_zero());
  // Scalars ride along multiplicatively.
  SteinbergElement f = SteinbergElement::point_mass(g, a01, GaussianRational(2, 1));
  SteinbergElement h = SteinbergElement::point_mass(g, a12, GaussianRational(0, 3));
  SteinbergElement fh = convolve(f, h);
  CHECK(fh[a02] == GaussianRational(2, 1) * GaussianRational(0, 3));
}

TEST_CASE("the unit indicator is a two-sided convolution identity") {
  FiniteGroupoid g = from("union(pair:2,group:cyclic:3)");
  Rng rng(7);
  SteinbergElement one = SteinbergElement::unit_indicator(g);
  for (int t = 0; t < 20; ++t) {
    SteinbergElement f = random_steinberg(g, rng);
    CHECK(convolve(one, f) == f);
    CHECK(convolve(f, one) == f);
    CHECK(involute(involute(f)) == f);
  }
}

TEST_CASE("involution anti-commutes with convolution") {
  FiniteGroupoid g = from("product(pair:2,group:cyclic:2)");
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    SteinbergElement f = random_steinberg(g, rng);
    SteinbergElement h = random_steinberg(g, rng);
    CHECK(involute(convolve(f, h)) == convolve(involute(h), involute(f)));
    CHECK(convolve(f + h, f) == convolve(f, f) + convolve(h, f));  // bilinearity spot check
  }
}

TEST_CASE("pushforwards add fibers and vanish on represented elements") {
  FiniteGroupoid g = from("pair:2");
  SteinbergElement f = SteinbergElement::point_mass(g, g.arrow_by_label("a0_1"));

  SteinbergElement r = r_star(f);
  SteinbergElement s = s_star(f);
  CHECK(r[g.arrow_by_label("u0")] == GaussianRational(1));
  CHECK(r[g.arrow_by_label("u1")] == GaussianRational(0));
  CHECK(s[g.arrow_by_label("u1")] == GaussianRational(1));
  CHECK(!delta1(f).is_zero());

  // Indicators of full bisections have equal range and source pushforwards.
  for (const FullBisection& u : enumerate_full_bisections(g)) {
    CHECK(delta1(indicator_of(u)).is_zero());
  }
}

TEST_CASE("fiber-sum matrix entries, sums, and fiber decomposition") {
  FiniteGroupoid g = from("pair:2");
  SteinbergElement f =
      SteinbergElement::point_mass(g, g.arrow_by_label("a0_1"), GaussianRational(3, 0)) +
      SteinbergElement::point_mass(g, g.arrow_by_label("u1"), GaussianRational(0, 1));

  ComplexMatrix t = t_matrix(f);
  REQUIRE(t.rows() == 2);
  CHECK(t.at(0, 1) == GaussianRational(3, 0));  // arrow from u1 to u0
  CHECK(t.at(1, 1) == GaussianRational(0, 1));
  CHECK(t.at(0, 0) == GaussianRational(0));
  CHECK(t.row_sum(0) == GaussianRational(3, 0));
  CHECK(t.col_sum(1) == GaussianRational(3, 1));

  std::vector<SteinbergElement> fibers = decompose_fibers(f);
  REQUIRE(fibers.size() == 4);
  SteinbergElement total(g);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const SteinbergElement& part = fibers[i * 2 + j];
      for (ArrowId a : part.support()) {
        CHECK(g.range_of(a) == i);
        CHECK(g.source_of(a) == j);
      }
      total += part;
    }
  }
  CHECK(total == f);
}

TEST_CASE("fiber-sum matrix is a *-homomorphism on random elements") {
  FiniteGroupoid g = from("union(pair:2,pair:2)");
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    SteinbergElement f = random_steinberg(g, rng);
    SteinbergElement h = random_steinberg(g, rng);
    CHECK(t_matrix(convolve(f, h)) == t_matrix(f) * t_matrix(h));
    CHECK(t_matrix(involute(f)) == t_matrix(f).adjoint());
    CHECK(t_matrix(f + h) == t_matrix(f) + t_matrix(h));
  }
}

TEST_CASE("group ring elements multiply through the set product") {
  FiniteGroupoid g = from("pair:3");
  std::vector<FullBisection> elements = enumerate_full_bisections(g);

  GroupRingElement x = delta(elements[1]) + delta(elements[2]);
  GroupRingElement y = delta(elements[3]);
  GroupRingElement xy = x * y;
  GroupRingElement expected =
      delta(multiply(elements[1], elements[3])) + delta(multiply(elements[2], elements[3]));
  CHECK(xy == expected);

  CHECK(delta(elements[4]).star() == delta(invert_bisection(elements[4])));

  // Coefficients that cancel disappear from the term map.
  GroupRingElement z(g);
  z.add_term(elements[1], GaussianRational(1));
  z.add_term(elements[1], GaussianRational(-1));
  CHECK(z.is_zero());

  // pi sends generators to indicators and is linear and multiplicative.
  CHECK(pi(delta(elements[2])) == indicator_of(elements[2]));
  CHECK(pi(x * y) == convolve(pi(x), pi(y)));
  CHECK(pi(x.star()) == involute(pi(x)));
  GaussianRational c(2, -1);
  CHECK(pi(c * x) == c * pi(x));
}
