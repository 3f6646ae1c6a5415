#include "fullgroup/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "fullgroup/errors.hpp"

namespace fullgroup {

namespace {

// Hard cap on the arrow count: the composition table is materialized as an
// n*n array, so this bounds memory at ~16 MiB of table.
constexpr int kMaxArrows = 2048;

std::string default_label(int index) { return "a" + std::to_string(index); }

}  // namespace

FiniteGroupoid::FiniteGroupoid(int num_units, std::vector<ArrowId> range,
                               std::vector<ArrowId> source, std::vector<ArrowId> inverse,
                               std::vector<int> compose_table, std::vector<std::string> labels)
    : num_units_(num_units),
      range_(std::move(range)),
      source_(std::move(source)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose_table)),
      labels_(std::move(labels)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("groupoid must be nonempty");
  if (n > kMaxArrows) {
    throw CapExceededError("groupoid size cap exceeded: " + std::to_string(n) + " arrows (max " +
                           std::to_string(kMaxArrows) + ")");
  }
  if (num_units_ < 1 || num_units_ > n) {
    throw std::invalid_argument("unit count must lie in 1..size");
  }
  if (static_cast<int>(source_.size()) != n || static_cast<int>(inverse_.size()) != n) {
    throw std::invalid_argument("range/source/inverse tables must all have one entry per arrow");
  }
  if (compose_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("composition table must be size*size");
  }
  for (int a = 0; a < n; ++a) {
    if (range_[a] < 0 || range_[a] >= num_units_ || source_[a] < 0 || source_[a] >= num_units_) {
      throw std::invalid_argument("range and source must map arrows to units");
    }
    if (inverse_[a] < 0 || inverse_[a] >= n) {
      throw std::invalid_argument("inverse table entry out of range");
    }
  }
  for (int e : compose_) {
    if (e < -1 || e >= n) throw std::invalid_argument("composition table entry out of range");
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int a = 0; a < n; ++a) labels_.push_back(default_label(a));
  } else if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count must match arrow count");
  }
  {
    std::set<std::string> seen;
    for (const std::string& l : labels_) {
      if (!seen.insert(l).second) throw std::invalid_argument("duplicate arrow label: " + l);
    }
  }

  fibers_.assign(static_cast<std::size_t>(num_units_) * num_units_, {});
  range_fibers_.assign(num_units_, {});
  source_fibers_.assign(num_units_, {});
  for (int a = 0; a < n; ++a) {
    fibers_[static_cast<std::size_t>(range_[a]) * num_units_ + source_[a]].push_back(a);
    range_fibers_[range_[a]].push_back(a);
    source_fibers_[source_[a]].push_back(a);
  }
}

const std::vector<ArrowId>& FiniteGroupoid::fiber(ArrowId u, ArrowId v) const {
  return fibers_[static_cast<std::size_t>(u) * num_units_ + v];
}

const std::vector<ArrowId>& FiniteGroupoid::range_fiber(ArrowId u) const {
  return range_fibers_[u];
}

const std::vector<ArrowId>& FiniteGroupoid::source_fiber(ArrowId v) const {
  return source_fibers_[v];
}

ArrowId FiniteGroupoid::arrow_by_label(const std::string& label) const {
  for (int a = 0; a < size(); ++a) {
    if (labels_[a] == label) return a;
  }
  throw std::invalid_argument("no arrow labeled \"" + label + "\"");
}

ValidationReport FiniteGroupoid::validate() const {
  const int n = size();
  auto fail = [&](std::string message, std::vector<ArrowId> witnesses) {
    return ValidationReport{false, std::move(message), std::move(witnesses)};
  };

  for (int u = 0; u < num_units_; ++u) {
    if (range_[u] != u || source_[u] != u || inverse_[u] != u) {
      return fail("unit structure violated at " + labels_[u], {u});
    }
  }
  for (int a = 0; a < n; ++a) {
    ArrowId inv = inverse_[a];
    if (range_[inv] != source_[a] || source_[inv] != range_[a]) {
      return fail("inversion ranges violated at " + labels_[a], {a});
    }
    if (inverse_[inv] != a) {
      return fail("inversion not involutive at " + labels_[a], {a});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool defined = compose(a, b) >= 0;
      if (composable(a, b) && !defined) {
        return fail("composition undefined for composable pair (" + labels_[a] + ", " + labels_[b] + ")",
                    {a, b});
      }
      if (!composable(a, b) && defined) {
        return fail("composition defined for non-composable pair (" + labels_[a] + ", " + labels_[b] + ")",
                    {a, b});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (compose(a, inverse_[a]) != range_[a]) {
      return fail("range identity violated at " + labels_[a], {a});
    }
    if (compose(inverse_[a], a) != source_[a]) {
      return fail("source identity violated at " + labels_[a], {a});
    }
  }
  for (int a = 0; a < n; ++a) {
    if (compose(range_[a], a) != a) {
      return fail("left identity violated at " + labels_[a], {a});
    }
    if (compose(a, source_[a]) != a) {
      return fail("right identity violated at " + labels_[a], {a});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (ArrowId b : range_fibers_[source_[a]]) {
      ArrowId ab = compose(a, b);
      if (range_[ab] != range_[a]) {
        return fail("composition range violated at (" + labels_[a] + ", " + labels_[b] + ")", {a, b});
      }
      if (source_[ab] != source_[b]) {
        return fail("composition source violated at (" + labels_[a] + ", " + labels_[b] + ")", {a, b});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (ArrowId b : range_fibers_[source_[a]]) {
      for (ArrowId c : range_fibers_[source_[b]]) {
        if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
          return fail("associativity violated at (" + labels_[a] + ", " + labels_[b] + ", " +
                          labels_[c] + ")",
                      {a, b, c});
        }
      }
    }
  }
  return {};
}

FiniteGroupoid make_group(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group table must be nonempty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("group table must be square");
    }
    for (int e : row) {
      if (e < 0 || e >= n) throw std::invalid_argument("group table entry out of range");
    }
  }
  // Locate the two-sided identity.
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw std::invalid_argument("group table has no identity element");
  for (int x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < n && !has_inverse; ++y) {
      has_inverse = table[x][y] == identity && table[y][x] == identity;
    }
    if (!has_inverse) {
      throw std::invalid_argument("group table element " + std::to_string(x) + " has no inverse");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw std::invalid_argument("group table is not associative at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }

  // Remap so the identity sits at index 0 (units first), preserving the
  // relative order of the remaining elements.
  std::vector<int> new_of_old(n), old_of_new(n);
  new_of_old[identity] = 0;
  old_of_new[0] = identity;
  int next = 1;
  for (int x = 0; x < n; ++x) {
    if (x == identity) continue;
    new_of_old[x] = next;
    old_of_new[next] = x;
    ++next;
  }

  std::vector<ArrowId> range(n, 0), source(n, 0), inverse(n);
  std::vector<int> compose(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int oi = old_of_new[i];
    for (int y = 0; y < n; ++y) {
      if (table[oi][y] == identity) inverse[i] = new_of_old[y];
    }
    for (int j = 0; j < n; ++j) {
      compose[static_cast<std::size_t>(i) * n + j] = new_of_old[table[oi][old_of_new[j]]];
    }
  }

  std::vector<std::string> out_labels(n);
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) {
      out_labels[i] = i == 0 ? std::string("e") : "g" + std::to_string(old_of_new[i]);
    }
  } else {
    if (static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("label count must match group order");
    }
    for (int i = 0; i < n; ++i) out_labels[i] = labels[old_of_new[i]];
  }
  return FiniteGroupoid(1, std::move(range), std::move(source), std::move(inverse),
                        std::move(compose), std::move(out_labels));
}

FiniteGroupoid make_cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  if (n > kMaxArrows) throw CapExceededError("cyclic group order exceeds the groupoid size cap");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    labels[i] = i == 0 ? std::string("e") : (i == 1 ? std::string("g") : "g" + std::to_string(i));
  }
  return make_group(table, std::move(labels));
}

FiniteGroupoid make_symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  if (n > 5) {
    throw CapExceededError("symmetric group capped at degree 5 (120 arrows)");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      std::vector<int> prod(n);
      for (int x = 0; x < n; ++x) prod[x] = perms[i][perms[j][x]];
      table[i][j] = index[prod];
    }
    if (i == 0) {
      labels[i] = "e";
    } else {
      std::string one_line;
      for (int x : perms[i]) one_line += std::to_string(x);
      labels[i] = "p" + one_line;
    }
  }
  return make_group(table, std::move(labels));
}

FiniteGroupoid make_pair_groupoid(int k) {
  if (k < 1) throw std::invalid_argument("pair groupoid needs at least one unit");
  if (k > 32) throw CapExceededError("pair groupoid capped at 32 units");
  const int n = k * k;
  // Arrow (i <- j): units (i, i) first as 0..k-1, then the off-diagonal
  // pairs in lexicographic (i, j) order.
  std::vector<std::vector<int>> id(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) id[i][i] = i;
  int next = k;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) id[i][j] = next++;
    }
  }
  std::vector<ArrowId> range(n), source(n), inverse(n);
  std::vector<int> compose(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::string> labels(n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int a = id[i][j];
      range[a] = i;
      source[a] = j;
      inverse[a] = id[j][i];
      labels[a] = i == j ? "u" + std::to_string(i)
                         : "a" + std::to_string(i) + "_" + std::to_string(j);
      for (int l = 0; l < k; ++l) {
        compose[static_cast<std::size_t>(a) * n + id[j][l]] = id[i][l];
      }
    }
  }
  return FiniteGroupoid(k, std::move(range), std::move(source), std::move(inverse),
                        std::move(compose), std::move(labels));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = a.size(), nb = b.size();
  const int ua = a.num_units(), ub = b.num_units();
  const int n = na + nb;
  const int units = ua + ub;
  // Units of a, units of b, then non-units of a, non-units of b.
  auto map_a = [&](ArrowId x) { return x < ua ? x : units + (x - ua); };
  auto map_b = [&](ArrowId y) { return y < ub ? ua + y : units + (na - ua) + (y - ub); };

  std::vector<ArrowId> range(n), source(n), inverse(n);
  std::vector<int> compose(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::string> labels(n);
  for (ArrowId x = 0; x < na; ++x) {
    ArrowId m = map_a(x);
    range[m] = map_a(a.range_of(x));
    source[m] = map_a(a.source_of(x));
    inverse[m] = map_a(a.invert(x));
    labels[m] = "(" + a.label(x) + ",1)";
    for (ArrowId y = 0; y < na; ++y) {
      int c = a.compose(x, y);
      if (c >= 0) compose[static_cast<std::size_t>(m) * n + map_a(y)] = map_a(c);
    }
  }
  for (ArrowId x = 0; x < nb; ++x) {
    ArrowId m = map_b(x);
    range[m] = map_b(b.range_of(x));
    source[m] = map_b(b.source_of(x));
    inverse[m] = map_b(b.invert(x));
    labels[m] = "(" + b.label(x) + ",2)";
    for (ArrowId y = 0; y < nb; ++y) {
      int c = b.compose(x, y);
      if (c >= 0) compose[static_cast<std::size_t>(m) * n + map_b(y)] = map_b(c);
    }
  }
  return FiniteGroupoid(units, std::move(range), std::move(source), std::move(inverse),
                        std::move(compose), std::move(labels));
}

FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const long na = a.size(), nb = b.size();
  if (na * nb > kMaxArrows) {
    throw CapExceededError("product groupoid would exceed the groupoid size cap");
  }
  const int n = static_cast<int>(na * nb);
  // Pairs (x, y) in x-major lexicographic order, unit pairs pulled to the front
  // (in the same lexicographic order among themselves).
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (ArrowId x = 0; x < na; ++x) {
    if (!a.is_unit(x)) break;
    for (ArrowId y = 0; y < nb && b.is_unit(y); ++y) id[x * nb + y] = next++;
  }
  const int units = next;
  for (ArrowId x = 0; x < na; ++x) {
    for (ArrowId y = 0; y < nb; ++y) {
      if (id[x * nb + y] < 0) id[x * nb + y] = next++;
    }
  }
  std::vector<ArrowId> range(n), source(n), inverse(n);
  std::vector<int> compose(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::string> labels(n);
  for (ArrowId x = 0; x < na; ++x) {
    for (ArrowId y = 0; y < nb; ++y) {
      int m = id[x * nb + y];
      range[m] = id[a.range_of(x) * nb + b.range_of(y)];
      source[m] = id[a.source_of(x) * nb + b.source_of(y)];
      inverse[m] = id[a.invert(x) * nb + b.invert(y)];
      labels[m] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (ArrowId x2 = 0; x2 < na; ++x2) {
        int cx = a.compose(x, x2);
        if (cx < 0) continue;
        for (ArrowId y2 = 0; y2 < nb; ++y2) {
          int cy = b.compose(y, y2);
          if (cy < 0) continue;
          compose[static_cast<std::size_t>(m) * n + id[x2 * nb + y2]] = id[cx * nb + cy];
        }
      }
    }
  }
  return FiniteGroupoid(units, std::move(range), std::move(source), std::move(inverse),
                        std::move(compose), std::move(labels));
}

OrbitDecomposition orbits(const FiniteGroupoid& g) {
  const int units = g.num_units();
  std::vector<int> parent(units);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = g.num_units(); a < g.size(); ++a) {
    int ru = find(g.range_of(a)), su = find(g.source_of(a));
    if (ru != su) parent[ru] = su;
  }
  std::map<int, std::vector<ArrowId>> buckets;
  for (int u = 0; u < units; ++u) buckets[find(u)].push_back(u);
  OrbitDecomposition out;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    out.orbits.push_back(members);
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (const auto& orbit : out.orbits) {
    out.isotropy_order.push_back(g.fiber(orbit.front(), orbit.front()).size());
  }
  return out;
}

std::vector<ArrowId> isotropy(const FiniteGroupoid& g) {
  std::vector<ArrowId> out;
  for (int a = 0; a < g.size(); ++a) {
    if (g.range_of(a) == g.source_of(a)) out.push_back(a);
  }
  return out;
}

bool is_all_isotropy(const FiniteGroupoid& g) {
  for (int a = 0; a < g.size(); ++a) {
    if (g.range_of(a) != g.source_of(a)) return false;
  }
  return true;
}

int nontrivial_isotropy_count(const FiniteGroupoid& g) {
  int count = 0;
  for (int u = 0; u < g.num_units(); ++u) {
    if (g.fiber(u, u).size() > 1) ++count;
  }
  return count;
}

}  // namespace fullgroup
