#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fullgroup/scalar.hpp"

namespace fullgroup::f2 {

/// Reduced word in the free group on two generators.  Letters are coded
/// 0 = a, 1 = a^{-1}, 2 = b, 3 = b^{-1}; the inverse letter is code ^ 1.
/// Comparison is shortlex: length first, then letter codes, so the canonical
/// enumeration order is the natural iteration order of sorted containers.
class Word {
 public:
  Word() = default;

  static Word identity() { return {}; }

  /// Parses "e" or a letter string over {a, A, b, B} (uppercase = inverse).
  /// Unreduced input is reduced.
  static Word from_string(const std::string& text);

  /// "e" for the identity, else the letter string, e.g. "aB".
  std::string str() const;

  int length() const { return static_cast<int>(codes_.size()); }
  const std::string& codes() const { return codes_; }

  Word inverse() const;

  /// Reduced product.
  friend Word operator*(const Word& s, const Word& t);

  friend bool operator==(const Word& s, const Word& t) { return s.codes_ == t.codes_; }
  friend bool operator!=(const Word& s, const Word& t) { return !(s == t); }
  /// Shortlex.
  friend bool operator<(const Word& s, const Word& t) {
    if (s.codes_.size() != t.codes_.size()) return s.codes_.size() < t.codes_.size();
    return s.codes_ < t.codes_;
  }

 private:
  std::string codes_;  // one byte per letter, values 0..3, no adjacent inverse pairs

  friend Word word_at(std::uint64_t index);
  friend std::uint64_t word_index(const Word& w);
};

/// Number of reduced words of length m: 1, 4, 12, 36, ...
std::uint64_t sphere_size(int m);

/// Number of reduced words of length <= r: 1 + 2(3^r - 1).
std::uint64_t ball_size(int r);

/// Smallest c >= 0 with 3^c >= n.
int ceil_log3(std::uint64_t n);

/// The shortlex position of w: word_at(word_index(w)) == w.
std::uint64_t word_index(const Word& w);
/// The index-th word in shortlex order (0 is the identity).
Word word_at(std::uint64_t index);

/// First n words in shortlex order.
std::vector<Word> canonical_enumeration(std::uint64_t n);

/// Integer check that the ball of radius ceil_log3(n) holds at least n words,
/// i.e. that the first n words all have length <= ceil_log3(n).
bool cumulative_sphere_bound(std::uint64_t n);

/// Finitely supported real function on the free group (binary64 coefficients;
/// this module is the only floating-point one in the library).
using Function = std::map<Word, double>;

/// The running average of the first n canonical words: 1/n on each.
Function psi(int n);

/// 2 * (sum over support of f(s)^2 * (1 + |s|^4))^{1/2}: the rapid-decay
/// upper bound on the reduced operator norm of f.
double haagerup_rhs(const Function& f);

/// The closed-form bound 12 * ceil_log3(n)^2 / sqrt(n) (0 when n = 1).
double paper_bound(std::uint64_t n);

/// The same bound as an exact rational, available when sqrt(n) is an integer.
std::optional<Rational> paper_bound_exact(std::uint64_t n);

/// One inequality of the bound chain, evaluated for display; `ok` is decided
/// by exact integer arithmetic, not by comparing the floating lhs/rhs.
struct BoundLink {
  std::string name;
  double lhs = 0, rhs = 0;
  bool ok = false;
};

struct BoundChainReport {
  std::uint64_t n = 0;
  int c = 0;  // ceil_log3(n)
  std::vector<BoundLink> links;
  bool all_ok = false;
};

/// Verifies every inequality in the chain from haagerup_rhs(psi_n) down to
/// paper_bound(n), using sphere counts only (no word enumeration).  All links
/// reduce to integer comparisons, so the check is exact.  Requires
/// 2 <= n <= 10^9.
///
/// The middle of the chain keeps the length-zero term as the literal 1
/// rather than folding it into the 8 * 3^{m-1} * m^4 envelope (whose m = 0
/// term would be 8/3 * 0 = 0, making the claimed inequality false for
/// n in {2, 3}), and the geometric-sum link is checked as <=, which is the
/// direction the chain needs.
BoundChainReport bound_chain_check(std::uint64_t n);

struct PowerIterationOptions {
  /// Relative plateau threshold on successive squared-norm estimates.
  double tolerance = 1e-10;
  int max_iterations = 100000;
  /// Start vector (defaults to the normalized all-ones vector); must have
  /// the ball dimension when provided.
  const std::vector<double>* warm_start = nullptr;
};

/// Left convolution by f on the span of Ball(R), matrix-free: one gather
/// table per support word.  `max_radius` caps memory (|Ball(9)| = 39365).
class BallOperator {
 public:
  BallOperator(const Function& f, int radius, int max_radius = 9);

  int radius() const { return radius_; }
  std::size_t dimension() const { return dim_; }

  void apply(const std::vector<double>& in, std::vector<double>& out) const;
  void apply_adjoint(const std::vector<double>& in, std::vector<double>& out) const;

  /// Largest singular value via power iteration on (adjoint compose apply);
  /// a certified lower bound on the reduced operator norm of f.
  /// Throws std::runtime_error if the plateau criterion is not met within the
  /// iteration limit.
  double operator_norm(const PowerIterationOptions& options = {}) const;

 private:
  int radius_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coeffs_;
  std::vector<std::vector<std::int32_t>> left_tables_;   // index of s^{-1} w, -1 outside
  std::vector<std::vector<std::int32_t>> right_tables_;  // index of s w, -1 outside
};

/// Operator norm of f truncated to Ball(radius).  Requires radius at least
/// the longest support word and at most max_radius.
double truncated_norm(const Function& f, int radius, PowerIterationOptions options = {},
                      int max_radius = 9);

/// truncated_norm(psi(n), radius) for n = 1..n_max, sharing gather tables and
/// warm-starting each n from the previous singular vector.  Matches the
/// one-shot values to within the plateau tolerance.
std::vector<double> psi_truncated_norms(int n_max, int radius, int max_radius = 9);

/// The group-ring preimage of the averaged pair function on the disjoint
/// union of two free-group copies: (1/n) * sum of delta_{U_i} with
/// U_i = {(t,1), (g_i,2)}, whose image under the representation is
/// 1 at (t,1) and 1/n at each (g_i,2).  Symbolic: the groupoid is infinite,
/// so only the support description is materialized.
struct PairAverage {
  int n = 0;
  Word t;
  /// The second-copy words g_1..g_n.
  std::vector<Word> second_copy_words() const;
  double coefficient() const { return 1.0 / n; }
  /// Value of the image at (w, copy), copy in {1, 2}.
  double pi_value(const Word& w, int copy) const;
  std::string str() const;
};

/// Builds the preimage description for given n >= 1 and marker word t.
PairAverage phi_n_preimage(int n, const Word& t);

}  // namespace fullgroup::f2
