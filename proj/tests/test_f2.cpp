#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fullgroup/errors.hpp"
#include "fullgroup/f2.hpp"

using namespace fullgroup::f2;
using fullgroup::CapExceededError;

namespace {

/// All reduced words of length exactly m, by depth-first extension.
void extend(const Word& w, int remaining, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(w);
    return;
  }
  for (const char* letter : {"a", "A", "b", "B"}) {
    Word next = w * Word::from_string(letter);
    if (next.length() == w.length() + 1) extend(next, remaining - 1, out);
  }
}

std::vector<Word> brute_force_sphere(int m) {
  std::vector<Word> out;
  extend(Word::identity(), m, out);
  return out;
}

}  // namespace

TEST_CASE("words reduce, multiply, and invert like free-group elements") {
  CHECK(Word::from_string("aA") == Word::identity());
  CHECK(Word::from_string("abBA") == Word::identity());
  CHECK(Word::from_string("e") == Word::identity());
  CHECK(Word::identity().str() == "e");
  CHECK(Word::from_string("abA").length() == 3);

  Word ab = Word::from_string("ab");
  CHECK(ab.inverse() == Word::from_string("BA"));
  CHECK((ab * ab.inverse()) == Word::identity());
  CHECK((ab * Word::from_string("Ba")).str() == "aa");
  CHECK((Word::from_string("aB") * Word::from_string("bA")) == Word::identity());

  // Associativity and inverse laws on a brute-forced ball.
  std::vector<Word> ball;
  for (int m = 0; m <= 2; ++m) {
    for (const Word& w : brute_force_sphere(m)) ball.push_back(w);
  }
  for (const Word& x : ball) {
    CHECK((x * x.inverse()) == Word::identity());
    for (const Word& y : ball) {
      CHECK((x * y).inverse() == y.inverse() * x.inverse());
    }
  }

  CHECK_THROWS_AS(Word::from_string("axb"), std::invalid_argument);
}

TEST_CASE("sphere and ball counts") {
  CHECK(sphere_size(0) == 1);
  CHECK(sphere_size(1) == 4);
  CHECK(sphere_size(2) == 12);
  CHECK(sphere_size(3) == 36);
  CHECK(ball_size(0) == 1);
  CHECK(ball_size(1) == 5);
  CHECK(ball_size(2) == 17);
  CHECK(ball_size(9) == 39365);

  for (int m = 0; m <= 4; ++m) {
    CHECK(brute_force_sphere(m).size() == sphere_size(m));
  }
  CHECK_THROWS_AS(sphere_size(41), std::overflow_error);
  CHECK_THROWS_AS(ball_size(40), std::overflow_error);
}

TEST_CASE("ceil_log3 and the cumulative sphere bound") {
  CHECK(ceil_log3(1) == 0);
  CHECK(ceil_log3(2) == 1);
  CHECK(ceil_log3(3) == 1);
  CHECK(ceil_log3(4) == 2);
  CHECK(ceil_log3(9) == 2);
  CHECK(ceil_log3(10) == 3);
  CHECK(ceil_log3(3486784401ULL) == 20);      // 3^20
  CHECK(ceil_log3(3486784402ULL) == 21);

  for (std::uint64_t n = 2; n <= 2000; ++n) CHECK(cumulative_sphere_bound(n));
  CHECK(cumulative_sphere_bound(1000000));
  CHECK(cumulative_sphere_bound(1000000000));
}

TEST_CASE("the arithmetic enumeration is the shortlex enumeration") {
  // Index 0 is the identity, then the four generators in letter order.
  std::vector<Word> first5 = canonical_enumeration(5);
  CHECK(first5[0] == Word::identity());
  CHECK(first5[1] == Word::from_string("a"));
  CHECK(first5[2] == Word::from_string("A"));
  CHECK(first5[3] == Word::from_string("b"));
  CHECK(first5[4] == Word::from_string("B"));

  std::vector<Word> listed = canonical_enumeration(ball_size(3));
  CHECK(std::is_sorted(listed.begin(), listed.end()));

  // Set-equal to the brute-forced ball of radius 3, with exact indices.
  std::set<Word> brute;
  for (int m = 0; m <= 3; ++m) {
    for (const Word& w : brute_force_sphere(m)) brute.insert(w);
  }
  REQUIRE(brute.size() == listed.size());
  for (std::uint64_t i = 0; i < listed.size(); ++i) {
    CHECK(brute.count(listed[i]) == 1);
    CHECK(word_index(listed[i]) == i);
    CHECK(word_at(i) == listed[i]);
  }
}

TEST_CASE("averages, their Haagerup bound, and the final bound") {
  Function psi5 = psi(5);
  REQUIRE(psi5.size() == 5);
  CHECK(psi5.at(Word::identity()) == doctest::Approx(0.2));
  CHECK(psi5.at(Word::from_string("B")) == doctest::Approx(0.2));

  // 2 sqrt(sum |f|^2 (1 + |s|^4)): for psi_5 this is 2 sqrt(9/25) = 6/5.
  CHECK(haagerup_rhs(psi5) == doctest::Approx(1.2).epsilon(1e-12));
  // A point mass at a length-2 word gives 2 sqrt(17).
  Function point{{Word::from_string("ab"), 1.0}};
  CHECK(haagerup_rhs(point) == doctest::Approx(2 * std::sqrt(17.0)).epsilon(1e-12));

  CHECK(paper_bound(1) == doctest::Approx(0.0));
  CHECK(paper_bound(3) == doctest::Approx(12.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(paper_bound(9) == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(paper_bound(3486784401ULL) ==
        doctest::Approx(12.0 * 400 / std::sqrt(3486784401.0)).epsilon(1e-12));

  REQUIRE(paper_bound_exact(9).has_value());
  CHECK(*paper_bound_exact(9) == 16);
  REQUIRE(paper_bound_exact(16).has_value());
  CHECK(*paper_bound_exact(16) == 27);  // 12 * 3^2 / 4
  CHECK(*paper_bound_exact(1) == 0);
  CHECK(!paper_bound_exact(2).has_value());

  // Along n = 3^k the bound decreases from k = 4 on and drops under 1/2.
  double prev = paper_bound(81);
  std::uint64_t n = 81;
  for (int k = 5; k <= 16; ++k) {
    n *= 3;
    double cur = paper_bound(n);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev < 0.5);
}

TEST_CASE("every link of the bound chain holds, including the smallest n") {
  for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 5ULL, 17ULL, 81ULL, 5000ULL, 1000000ULL,
                          999999937ULL, 1000000000ULL}) {
    CAPTURE(n);
    BoundChainReport r = bound_chain_check(n);
    CHECK(r.all_ok);
    REQUIRE(r.links.size() == 7);
    CHECK(r.links[0].name == "support-in-ball");
    CHECK(r.links[1].name == "rhs-by-sphere-counts");
    CHECK(r.links[2].name == "sphere-count-envelope");
    CHECK(r.links[3].name == "fourth-power-envelope");
    CHECK(r.links[4].name == "geometric-sum");
    CHECK(r.links[5].name == "closed-form");
    CHECK(r.links[6].name == "end-to-end");
    for (const BoundLink& link : r.links) {
      CHECK(link.ok);
      CHECK(link.lhs <= link.rhs * (1 + 1e-12) + 1e-12);  // display values track the exact check
    }
    // The chain starts at the actual Haagerup quantity and ends at the final
    // bound.  (Materializing psi_n is only feasible for moderate n.)
    if (n <= 5000) {
      CHECK(r.links[1].lhs == doctest::Approx(haagerup_rhs(psi(n))).epsilon(1e-9));
      CHECK(r.links[6].lhs == doctest::Approx(haagerup_rhs(psi(n))).epsilon(1e-9));
    }
    CHECK(r.links[6].rhs == doctest::Approx(paper_bound(n)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(bound_chain_check(1), std::invalid_argument);
  CHECK_THROWS_AS(bound_chain_check(1000000001ULL), CapExceededError);
}

TEST_CASE("truncated operator norms are certified lower bounds") {
  // The identity acts as the identity operator on any ball.
  Function id{{Word::identity(), 1.0}};
  CHECK(truncated_norm(id, 3) == doctest::Approx(1.0).epsilon(1e-9));

  // A single generator acts as a partial isometry of norm 1.
  Function gen{{Word::from_string("a"), 1.0}};
  CHECK(truncated_norm(gen, 4) == doctest::Approx(1.0).epsilon(1e-8));

  // psi_5 at radius 9 sits just under the exact value (1 + 2 sqrt 3)/5.
  const double exact = (1 + 2 * std::sqrt(3.0)) / 5;
  double prev = 0.0;
  for (int radius = 5; radius <= 9; ++radius) {
    double norm = truncated_norm(psi(5), radius);
    CHECK(norm <= exact + 1e-9);
    CHECK(norm >= prev - 1e-12);  // nondecreasing in the radius
    prev = norm;
  }
  CHECK(prev > 0.85);
  CHECK(prev < 0.893);

  CHECK_THROWS_AS(truncated_norm(id, 10), CapExceededError);
  Function far{{word_at(ball_size(3)), 1.0}};  // a length-4 word
  CHECK_THROWS_AS(truncated_norm(far, 3), std::invalid_argument);
}

TEST_CASE("the warm-started sweep matches one-off truncations") {
  std::vector<double> sweep = psi_truncated_norms(20, 5);
  REQUIRE(sweep.size() == 20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(sweep[n - 1] == doctest::Approx(truncated_norm(psi(n), 5)).epsilon(1e-6));
    CHECK(sweep[n - 1] <= haagerup_rhs(psi(n)) + 1e-9);
  }
}

TEST_CASE("two-copy averages expose the right values to both copies") {
  Word t = Word::from_string("ab");
  PairAverage avg = phi_n_preimage(5, t);
  CHECK(avg.n == 5);
  CHECK(avg.coefficient() == doctest::Approx(0.2));
  CHECK(avg.second_copy_words() == canonical_enumeration(5));

  CHECK(avg.pi_value(t, 1) == doctest::Approx(1.0));
  CHECK(avg.pi_value(Word::from_string("ba"), 1) == doctest::Approx(0.0));
  CHECK(avg.pi_value(Word::identity(), 2) == doctest::Approx(0.2));
  CHECK(avg.pi_value(Word::from_string("aa"), 2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(avg.pi_value(t, 3), std::invalid_argument);
  CHECK(avg.str().find("delta") != std::string::npos);
  CHECK_THROWS_AS(phi_n_preimage(0, t), std::invalid_argument);

  // The second-copy payload is exactly psi_n, so subtracting the first-copy
  // point mass leaves a function whose Haagerup quantity is haagerup_rhs(psi_n).
  Function second;
  for (const Word& w : avg.second_copy_words()) second[w] = avg.pi_value(w, 2);
  CHECK(second == psi(5));
  CHECK(haagerup_rhs(second) == doctest::Approx(haagerup_rhs(psi(5))).epsilon(1e-12));
}
