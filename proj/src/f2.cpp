#include "fullgroup/f2.hpp"

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "fullgroup/errors.hpp"

namespace fullgroup::f2 {

namespace {

constexpr char kLetters[] = "aAbB";

// 3^k for k <= 40 (the largest power fitting in 64 bits).
const std::array<std::uint64_t, 41>& pow3_table() {
  static const auto table = [] {
    std::array<std::uint64_t, 41> t{};
    t[0] = 1;
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * 3;
    return t;
  }();
  return table;
}

std::uint64_t pow3(int k) {
  if (k < 0 || k > 40) throw std::overflow_error("3^k exceeds 64-bit range");
  return pow3_table()[static_cast<std::size_t>(k)];
}

void push_reduced(std::string& codes, char code) {
  if (!codes.empty() && codes.back() == (code ^ 1)) {
    codes.pop_back();
  } else {
    codes.push_back(code);
  }
}

}  // namespace

Word Word::from_string(const std::string& text) {
  Word w;
  if (text == "e" || text.empty()) return w;
  for (char ch : text) {
    char code;
    switch (ch) {
      case 'a': code = 0; break;
      case 'A': code = 1; break;
      case 'b': code = 2; break;
      case 'B': code = 3; break;
      default:
        throw std::invalid_argument(std::string("invalid word letter '") + ch +
                                    "' (expected a, A, b, B)");
    }
    push_reduced(w.codes_, code);
  }
  return w;
}

std::string Word::str() const {
  if (codes_.empty()) return "e";
  std::string out;
  out.reserve(codes_.size());
  for (char c : codes_) out.push_back(kLetters[static_cast<int>(c)]);
  return out;
}

Word Word::inverse() const {
  Word out;
  out.codes_.reserve(codes_.size());
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) {
    out.codes_.push_back(*it ^ 1);
  }
  return out;
}

Word operator*(const Word& s, const Word& t) {
  Word out;
  out.codes_ = s.codes_;
  out.codes_.reserve(s.codes_.size() + t.codes_.size());
  for (char c : t.codes_) push_reduced(out.codes_, c);
  return out;
}

std::uint64_t sphere_size(int m) {
  if (m < 0) throw std::invalid_argument("sphere radius must be >= 0");
  if (m == 0) return 1;
  if (m > 40) throw std::overflow_error("sphere size exceeds 64-bit range");
  return 4 * pow3(m - 1);
}

std::uint64_t ball_size(int r) {
  if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (r > 39) throw std::overflow_error("ball size exceeds 64-bit range");
  return 1 + 2 * (pow3(r) - 1);
}

int ceil_log3(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log3 needs n >= 1");
  int c = 0;
  std::uint64_t p = 1;
  while (p < n) {
    if (p > std::numeric_limits<std::uint64_t>::max() / 3) return c + 1;
    p *= 3;
    ++c;
  }
  return c;
}

std::uint64_t word_index(const Word& w) {
  const int m = w.length();
  if (m == 0) return 0;
  // Position within the sphere: the first letter has 4 choices, every later
  // letter 3 (anything but the inverse of its predecessor), ranked in code
  // order.  Mixed radix 4 * 3^(m-1), accumulated Horner-style.
  std::uint64_t acc = static_cast<std::uint64_t>(w.codes()[0]);
  for (int j = 1; j < m; ++j) {
    char prev_inv = w.codes()[j - 1] ^ 1;
    char c = w.codes()[j];
    acc = acc * 3 + static_cast<std::uint64_t>(c - (c > prev_inv ? 1 : 0));
  }
  return ball_size(m - 1) + acc;
}

Word word_at(std::uint64_t index) {
  Word w;
  if (index == 0) return w;
  int m = 1;
  while (ball_size(m) <= index) ++m;
  std::uint64_t t = index - ball_size(m - 1);
  std::uint64_t scale = pow3(m - 1);
  char c0 = static_cast<char>(t / scale);
  t %= scale;
  w.codes_.push_back(c0);
  for (int j = 1; j < m; ++j) {
    scale /= 3;
    char rank = static_cast<char>(t / scale);
    t %= scale;
    char prev_inv = w.codes_.back() ^ 1;
    w.codes_.push_back(rank + (rank >= prev_inv ? 1 : 0));
  }
  return w;
}

std::vector<Word> canonical_enumeration(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("canonical enumeration needs n >= 1");
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(word_at(i));
  return out;
}

bool cumulative_sphere_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cumulative sphere bound needs n >= 1");
  const int c = ceil_log3(n);
  if (c > 39) return true;  // the ball is astronomically larger than any uint64 n
  std::uint64_t total = 0;
  for (int m = 0; m <= c; ++m) total += sphere_size(m);
  return total >= n;
}

Function psi(int n) {
  if (n < 1) throw std::invalid_argument("psi_n needs n >= 1");
  Function f;
  for (const Word& w : canonical_enumeration(static_cast<std::uint64_t>(n))) {
    f[w] = 1.0 / n;
  }
  return f;
}

double haagerup_rhs(const Function& f) {
  double sum = 0;
  for (const auto& [w, c] : f) {
    const double len = static_cast<double>(w.length());
    sum += c * c * (1.0 + len * len * len * len);
  }
  return 2.0 * std::sqrt(sum);
}

double paper_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("paper bound needs n >= 1");
  const double c = static_cast<double>(ceil_log3(n));
  return 12.0 * c * c / std::sqrt(static_cast<double>(n));
}

std::optional<Rational> paper_bound_exact(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("paper bound needs n >= 1");
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_class root = sqrt(nz);
  if (root * root != nz) return std::nullopt;
  const long c = ceil_log3(n);
  Rational value(mpz_class(12 * c * c), root);
  value.canonicalize();
  return value;
}

BoundChainReport bound_chain_check(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("bound chain applies for n >= 2");
  if (n > 1000000000ULL) {
    throw CapExceededError("bound chain capped at n = 10^9 (64-bit sphere arithmetic)");
  }
  const int c = ceil_log3(n);
  BoundChainReport report;
  report.n = n;
  report.c = c;

  // Every quantity in the chain is 2*sqrt(S)/n for an S that is an integer or
  // an integer divided by 6 or 3, so each link is an exact integer comparison.
  const std::uint64_t ball_c = ball_size(c);

  auto fourth = [](std::uint64_t m) { return m * m * m * m; };

  std::uint64_t s_a = 0;  // sum over the actual support: count_m * (1 + m^4)
  for (int m = 0; m <= c; ++m) {
    const std::uint64_t prev = m == 0 ? 0 : ball_size(m - 1);
    const std::uint64_t count = n > prev ? std::min(n - prev, sphere_size(m)) : 0;
    s_a += count * (1 + fourth(static_cast<std::uint64_t>(m)));
  }
  std::uint64_t s_b = 0;  // full spheres: |E_m| * (1 + m^4)
  for (int m = 0; m <= c; ++m) {
    s_b += sphere_size(m) * (1 + fourth(static_cast<std::uint64_t>(m)));
  }
  std::uint64_t s_c = 1;  // length-zero term kept literal, envelope beyond
  for (int m = 1; m <= c; ++m) {
    s_c += 8 * pow3(m - 1) * fourth(static_cast<std::uint64_t>(m));
  }
  const std::uint64_t c4 = fourth(static_cast<std::uint64_t>(c));
  const std::uint64_t t6 = 8 * c4 * (pow3(c + 1) - 1);   // 6 * S_D
  const std::uint64_t u3 = 4 * c4 * (pow3(c + 2) - 1);   // 3 * S_E
  const std::uint64_t s_f = 36 * c4 * n;                 // paper bound squared, times n^2 / 4

  const double dn = static_cast<double>(n);
  auto value = [&](double s) { return 2.0 * std::sqrt(s) / dn; };
  const double va = value(static_cast<double>(s_a));
  const double vb = value(static_cast<double>(s_b));
  const double vc = value(static_cast<double>(s_c));
  const double vd = value(static_cast<double>(t6) / 6.0);
  const double ve = value(static_cast<double>(u3) / 3.0);
  const double vf = value(static_cast<double>(s_f));

  report.links = {
      {"support-in-ball", static_cast<double>(n), static_cast<double>(ball_c), n <= ball_c},
      {"rhs-by-sphere-counts", va, vb, s_a <= s_b},
      {"sphere-count-envelope", vb, vc, s_b <= s_c},
      {"fourth-power-envelope", vc, vd, 6 * s_c <= t6},
      {"geometric-sum", vd, ve, t6 <= 2 * u3},
      {"closed-form", ve, vf, u3 <= 3 * s_f},
      {"end-to-end", va, vf, s_a <= s_f},
  };
  report.all_ok = true;
  for (const auto& link : report.links) report.all_ok = report.all_ok && link.ok;
  return report;
}

namespace {

std::vector<std::int32_t> gather_table(const Word& s, const std::vector<Word>& ball, int radius) {
  std::vector<std::int32_t> table(ball.size());
  for (std::size_t t = 0; t < ball.size(); ++t) {
    Word prod = s * ball[t];
    table[t] =
        prod.length() <= radius ? static_cast<std::int32_t>(word_index(prod)) : std::int32_t{-1};
  }
  return table;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

void gather_add(const std::vector<std::int32_t>& table, double c, const std::vector<double>& in,
                std::vector<double>& out) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::int32_t j = table[i];
    if (j >= 0) out[i] += c * in[static_cast<std::size_t>(j)];
  }
}

}  // namespace

BallOperator::BallOperator(const Function& f, int radius, int max_radius) : radius_(radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (radius > max_radius) {
    throw CapExceededError("ball radius " + std::to_string(radius) + " exceeds the cap " +
                           std::to_string(max_radius));
  }
  const std::uint64_t dim = ball_size(radius);
  if (dim > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
    throw CapExceededError("ball dimension exceeds 32-bit indexing");
  }
  dim_ = static_cast<std::size_t>(dim);
  for (const auto& [w, c] : f) {
    if (c != 0.0 && w.length() > radius) {
      throw std::invalid_argument("truncation radius " + std::to_string(radius) +
                                  " smaller than the support word " + w.str());
    }
  }
  const std::vector<Word> ball = canonical_enumeration(dim);
  for (const auto& [w, c] : f) {
    if (c == 0.0) continue;
    coeffs_.push_back(c);
    left_tables_.push_back(gather_table(w.inverse(), ball, radius));
    right_tables_.push_back(gather_table(w, ball, radius));
  }
}

void BallOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
  out.assign(dim_, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    gather_add(left_tables_[k], coeffs_[k], in, out);
  }
}

void BallOperator::apply_adjoint(const std::vector<double>& in, std::vector<double>& out) const {
  out.assign(dim_, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    gather_add(right_tables_[k], coeffs_[k], in, out);
  }
}

namespace {

// Shared power-iteration driver: estimates the top eigenvalue of the positive
// operator step(v) = (adjoint of M)(M v) from a unit start vector, stopping at
// a relative plateau of the Rayleigh quotient (nondecreasing along the way).
// When `final_v` is given it receives the last iterate, for warm starts.
template <typename Step>
double power_iteration(std::vector<double> v, Step step, double tolerance, int max_iterations,
                       std::vector<double>* final_v = nullptr) {
  const double n0 = std::sqrt(dot(v, v));
  if (n0 == 0) throw std::invalid_argument("power iteration start vector is zero");
  for (double& x : v) x /= n0;

  std::vector<double> u;
  double prev = -1.0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    step(v, u);
    const double lambda = std::max(dot(v, u), 0.0);
    if (prev >= 0 && std::abs(lambda - prev) <= tolerance * std::max(lambda, 1e-300)) {
      if (final_v != nullptr) *final_v = std::move(v);
      return std::sqrt(lambda);
    }
    prev = lambda;
    const double un = std::sqrt(dot(u, u));
    if (un == 0) {
      if (final_v != nullptr) *final_v = std::move(v);
      return std::sqrt(lambda);  // v is annihilated; estimate from below
    }
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / un;
  }
  throw std::runtime_error("power iteration did not reach its plateau within " +
                           std::to_string(max_iterations) + " iterations");
}

}  // namespace

double BallOperator::operator_norm(const PowerIterationOptions& options) const {
  if (coeffs_.empty()) return 0.0;
  std::vector<double> v;
  if (options.warm_start != nullptr) {
    if (options.warm_start->size() != dim_) {
      throw std::invalid_argument("warm start vector has wrong dimension");
    }
    v = *options.warm_start;
  } else {
    v.assign(dim_, 1.0);
  }
  std::vector<double> mid;
  auto step = [&](const std::vector<double>& x, std::vector<double>& out) {
    apply(x, mid);
    apply_adjoint(mid, out);
  };
  return power_iteration(std::move(v), step, options.tolerance, options.max_iterations);
}

double truncated_norm(const Function& f, int radius, PowerIterationOptions options,
                      int max_radius) {
  BallOperator op(f, radius, max_radius);
  return op.operator_norm(options);
}

std::vector<double> psi_truncated_norms(int n_max, int radius, int max_radius) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (radius < 0 || radius > max_radius) {
    throw CapExceededError("ball radius " + std::to_string(radius) + " exceeds the cap " +
                           std::to_string(max_radius));
  }
  const std::uint64_t dim64 = ball_size(radius);
  if (static_cast<std::uint64_t>(n_max) > dim64) {
    throw std::invalid_argument("support of psi_n does not fit in the ball");
  }
  const std::size_t dim = static_cast<std::size_t>(dim64);
  const std::vector<Word> ball = canonical_enumeration(dim64);

  // Unnormalized operator S_n = sum of left translations by the first n
  // words; its largest singular value divided by n is the value for psi_n.
  // Tables grow by one word per step and the singular vector of S_{n-1}
  // warm-starts the iteration for S_n.
  std::vector<std::vector<std::int32_t>> left, right;
  std::vector<double> v(dim, 1.0), mid;
  std::vector<double> out;
  out.reserve(n_max);
  const PowerIterationOptions defaults;
  for (int n = 1; n <= n_max; ++n) {
    const Word& g = ball[static_cast<std::size_t>(n - 1)];
    left.push_back(gather_table(g.inverse(), ball, radius));
    right.push_back(gather_table(g, ball, radius));

    auto step = [&](const std::vector<double>& x, std::vector<double>& y) {
      mid.assign(dim, 0.0);
      for (int k = 0; k < n; ++k) gather_add(left[k], 1.0, x, mid);
      y.assign(dim, 0.0);
      for (int k = 0; k < n; ++k) gather_add(right[k], 1.0, mid, y);
    };
    // Plateau search warm-started from the previous top vector, which then
    // carries over to the next n.
    const double sigma =
        power_iteration(v, step, defaults.tolerance, defaults.max_iterations, &v);
    out.push_back(sigma / n);
  }
  return out;
}

std::vector<Word> PairAverage::second_copy_words() const {
  return canonical_enumeration(static_cast<std::uint64_t>(n));
}

double PairAverage::pi_value(const Word& w, int copy) const {
  if (copy == 1) return w == t ? 1.0 : 0.0;
  if (copy == 2) return word_index(w) < static_cast<std::uint64_t>(n) ? 1.0 / n : 0.0;
  throw std::invalid_argument("copy tag must be 1 or 2");
}

std::string PairAverage::str() const {
  std::string out;
  if (n > 1) out += "(1/" + std::to_string(n) + ")*(";
  bool first = true;
  for (const Word& g : second_copy_words()) {
    if (!first) out += " + ";
    first = false;
    out += "delta{(" + t.str() + ",1),(" + g.str() + ",2)}";
  }
  if (n > 1) out += ")";
  return out;
}

PairAverage phi_n_preimage(int n, const Word& t) {
  if (n < 1) throw std::invalid_argument("phi_n needs n >= 1");
  return {n, t};
}

}  // namespace fullgroup::f2
