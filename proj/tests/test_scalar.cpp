#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fullgroup/scalar.hpp"

using namespace fullgroup;

TEST_CASE("rationals reduce and parse") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("14") == 14);
  CHECK_THROWS_AS(parse_rational("i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("gaussian arithmetic is exact") {
  GaussianRational one_plus_i(1, 1);
  GaussianRational one_minus_i(1, -1);
  CHECK(one_plus_i * one_minus_i == GaussianRational(2));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));

  GaussianRational z(make_rational(2, 1), make_rational(-3, 5));
  CHECK(z.norm2() == make_rational(109, 25));
  CHECK(z * z.conj() == GaussianRational(z.norm2()));
  CHECK(z.conj().im() == make_rational(3, 5));

  // 1 / (1+i) = (1-i)/2
  CHECK(GaussianRational(1) / one_plus_i ==
        GaussianRational(make_rational(1, 2), make_rational(-1, 2)));
  CHECK_THROWS_AS(one_plus_i / GaussianRational(0), std::domain_error);

  // Field laws on a small sweep of nonzero elements.
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      GaussianRational w(make_rational(a, 3), make_rational(b, 2));
      if (w.is_zero()) continue;
      CHECK(w / w == GaussianRational(1));
      CHECK((w * z) / w == z);
    }
  }
}

TEST_CASE("gaussian literals parse in every accepted spelling") {
  CHECK(parse_gaussian("3/2") == GaussianRational(make_rational(3, 2)));
  CHECK(parse_gaussian("-1") == GaussianRational(-1));
  CHECK(parse_gaussian("i") == GaussianRational::i());
  CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(parse_gaussian("2-3i/5") ==
        GaussianRational(make_rational(2, 1), make_rational(-3, 5)));
  CHECK(parse_gaussian("3i/5") == parse_gaussian("3/5i"));
  CHECK(parse_gaussian("i/4") == GaussianRational(Rational(0), make_rational(1, 4)));
  CHECK(parse_gaussian("+1/2+i") ==
        GaussianRational(make_rational(1, 2), make_rational(1, 1)));

  CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_gaussian("1+2"), std::invalid_argument);    // two real terms
  CHECK_THROWS_AS(parse_gaussian("i+2i"), std::invalid_argument);   // two imaginary terms
  CHECK_THROWS_AS(parse_gaussian("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gaussian("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gaussian("1/0"), std::invalid_argument);
}

TEST_CASE("canonical printing round-trips") {
  CHECK(GaussianRational(0).str() == "0");
  CHECK(GaussianRational(make_rational(-3, 2)).str() == "-3/2");
  CHECK(GaussianRational::i().str() == "i");
  CHECK(GaussianRational(Rational(0), make_rational(-2, 3)).str() == "-2i/3");
  CHECK(GaussianRational(make_rational(1, 2), Rational(1)).str() == "1/2+i");
  CHECK(GaussianRational(Rational(2), make_rational(-3, 5)).str() == "2-3i/5");

  for (long re_num = -3; re_num <= 3; ++re_num) {
    for (long im_num = -3; im_num <= 3; ++im_num) {
      GaussianRational z(make_rational(re_num, 2), make_rational(im_num, 3));
      CHECK(parse_gaussian(z.str()) == z);
    }
  }
}
