// Command-line front end: parse groupoid descriptions, enumerate full groups,
// run the exact representation analyses, print fiber-sum matrices, tabulate
// the free-group norm bounds, and drive the corpus falsification suite.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "fullgroup/analysis.hpp"
#include "fullgroup/bisection.hpp"
#include "fullgroup/corpus.hpp"
#include "fullgroup/errors.hpp"
#include "fullgroup/expr.hpp"
#include "fullgroup/f2.hpp"
#include "fullgroup/groupoid_json.hpp"
#include "fullgroup/steinberg.hpp"

namespace {

using nlohmann::json;
using namespace fullgroup;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

std::size_t cap_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("FULLGROUP_CAP")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return fallback;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> arrow_labels(const FiniteGroupoid& g, const std::vector<ArrowId>& arrows) {
  std::vector<std::string> out;
  out.reserve(arrows.size());
  for (ArrowId a : arrows) out.push_back(g.label(a));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string bisection_str(const FullBisection& u) {
  return "{" + join(arrow_labels(u.groupoid(), u.arrows()), ", ") + "}";
}

std::string group_ring_str(const GroupRingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : x.terms()) {
    std::string coeff = c.str();
    bool negated = false;
    if (c == GaussianRational(-1)) {
      negated = true;
      coeff.clear();
    } else if (c == GaussianRational(1)) {
      coeff.clear();
    }
    if (first) {
      if (negated) out += "-";
    } else {
      out += negated ? " - " : " + ";
    }
    if (!coeff.empty()) {
      bool composite = coeff.find_first_of("+-", 1) != std::string::npos;
      out += composite ? "(" + coeff + ")*" : coeff + "*";
    }
    out += "delta" + bisection_str(u);
    first = false;
  }
  return out;
}

json group_ring_json(const GroupRingElement& x) {
  json terms = json::array();
  for (const auto& [u, c] : x.terms()) {
    terms.push_back({{"coefficient", c.str()},
                     {"arrows", arrow_labels(u.groupoid(), u.arrows())}});
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Element expressions:  term (+|- term)*   with
//   term  := [scalar '*'] atom
//   atom  := unit | point[REF] | ind[REF, ...] | delta[REF, ...]
//   REF   := arrow label | #index
// Commas and signs inside (...) or [...] do not split, so product labels
// like (u0,g) work; complex scalars with interior signs go in parentheses.

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

ArrowId parse_arrow_ref(const FiniteGroupoid& g, const std::string& raw) {
  std::string ref = trim(raw);
  if (ref.empty()) throw std::invalid_argument("empty arrow reference");
  if (ref[0] == '#') {
    char* end = nullptr;
    long idx = std::strtol(ref.c_str() + 1, &end, 10);
    if (!end || *end != '\0' || idx < 0 || idx >= g.size()) {
      throw std::invalid_argument("arrow index out of range: " + ref);
    }
    return static_cast<ArrowId>(idx);
  }
  return g.arrow_by_label(ref);
}

std::vector<ArrowId> parse_arrow_list(const FiniteGroupoid& g, const std::string& body) {
  std::vector<ArrowId> arrows;
  for (const std::string& part : split_top_level(body, ',')) arrows.push_back(parse_arrow_ref(g, part));
  return arrows;
}

SteinbergElement parse_atom(const FiniteGroupoid& g, const std::string& raw) {
  std::string atom = trim(raw);
  if (atom == "unit") return SteinbergElement::unit_indicator(g);
  auto bracketed = [&atom](const char* head) -> std::optional<std::string> {
    std::string prefix = std::string(head) + "[";
    if (atom.rfind(prefix, 0) == 0 && atom.back() == ']') {
      return atom.substr(prefix.size(), atom.size() - prefix.size() - 1);
    }
    return std::nullopt;
  };
  if (auto body = bracketed("point")) {
    std::vector<ArrowId> arrows = parse_arrow_list(g, *body);
    if (arrows.size() != 1) throw std::invalid_argument("point[...] takes exactly one arrow");
    return SteinbergElement::point_mass(g, arrows[0]);
  }
  if (auto body = bracketed("ind")) {
    std::vector<ArrowId> arrows = parse_arrow_list(g, *body);
    return SteinbergElement::indicator(g, arrows);
  }
  if (auto body = bracketed("delta")) {
    FullBisection u(g, parse_arrow_list(g, *body));  // validates fullness
    return SteinbergElement::indicator(g, u.arrows());
  }
  throw std::invalid_argument("unknown element atom: \"" + atom +
                              "\" (expected unit, point[...], ind[...], or delta[...])");
}

SteinbergElement parse_element(const FiniteGroupoid& g, const std::string& text) {
  SteinbergElement total(g);
  int depth = 0;
  std::string current;
  std::vector<std::pair<int, std::string>> signed_terms;  // (+1/-1, term)
  int sign = 1;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !trim(current).empty()) {
      signed_terms.emplace_back(sign, current);
      sign = (ch == '-') ? -1 : 1;
      current.clear();
    } else if (depth == 0 && (ch == '+' || ch == '-') && trim(current).empty()) {
      if (ch == '-') sign = -sign;
      current.clear();
    } else {
      current += ch;
    }
  }
  if (trim(current).empty()) throw std::invalid_argument("empty element expression");
  signed_terms.emplace_back(sign, current);

  for (const auto& [s, term] : signed_terms) {
    std::vector<std::string> factors = split_top_level(term, '*');
    SteinbergElement value(g);
    GaussianRational coeff(s);
    if (factors.size() == 1) {
      value = parse_atom(g, factors[0]);
    } else if (factors.size() == 2) {
      std::string scalar = trim(factors[0]);
      if (scalar.size() >= 2 && scalar.front() == '(' && scalar.back() == ')') {
        scalar = scalar.substr(1, scalar.size() - 2);
      }
      coeff *= parse_gaussian(scalar);
      value = parse_atom(g, factors[1]);
    } else {
      throw std::invalid_argument("element term has more than one '*': \"" + trim(term) + "\"");
    }
    value *= coeff;
    total += value;
  }
  return total;
}

// ---------------------------------------------------------------------------

struct ExprInput {
  std::string text;
  GroupoidExpr ast;
  FiniteGroupoid groupoid;
};

ExprInput build_input(const std::string& text) {
  GroupoidExpr ast = parse_expr(text);
  FiniteGroupoid g = build(ast);
  return ExprInput{text, std::move(ast), std::move(g)};
}

int run_validate(const std::string& text, bool as_json) {
  GroupoidExpr ast = parse_expr(text);
  FiniteGroupoid g = ast.kind == GroupoidExpr::Kind::File ? load_groupoid_file(ast.path)
                                                          : build(ast);
  ValidationReport report = g.validate();
  if (as_json) {
    emit({{"schema_version", 1},
          {"expr", to_string(ast)},
          {"arrows", g.size()},
          {"units", g.num_units()},
          {"valid", report.ok},
          {"message", report.message},
          {"witnesses", report.witnesses}});
  } else {
    if (report.ok) {
      std::cout << "valid: " << g.size() << " arrows, " << g.num_units() << " units\n";
    } else {
      std::cout << "invalid: " << report.message << "\n";
    }
  }
  return report.ok ? kExitOk : kExitDomain;
}

int run_full_group(const std::string& text, bool as_json, bool cayley) {
  ExprInput in = build_input(text);
  AnalysisOptions options;
  options.max_full_group = cap_from_env(options.max_full_group);
  if (cmp(full_group_order(in.groupoid), static_cast<unsigned long>(options.max_full_group)) > 0) {
    throw CapExceededError("full group of order " + full_group_order(in.groupoid).get_str() +
                           " exceeds the enumeration cap " + std::to_string(options.max_full_group));
  }
  std::vector<FullBisection> elements = enumerate_full_bisections(in.groupoid);

  std::vector<std::vector<int>> table;
  if (cayley) {
    table.assign(elements.size(), std::vector<int>(elements.size(), -1));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        FullBisection p = multiply(elements[i], elements[j]);
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        table[i][j] = static_cast<int>(it - elements.begin());
      }
    }
  }

  if (as_json) {
    json elems = json::array();
    for (const FullBisection& u : elements) elems.push_back(arrow_labels(in.groupoid, u.arrows()));
    json j = {{"schema_version", 1},
              {"expr", to_string(in.ast)},
              {"order", full_group_order(in.groupoid).get_str()},
              {"elements", elems}};
    if (cayley) j["cayley"] = table;
    emit(j);
  } else {
    std::cout << "full group order " << full_group_order(in.groupoid).get_str() << "\n";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      std::cout << "  [" << i << "] " << bisection_str(elements[i]) << "\n";
    }
    if (cayley) {
      std::cout << "multiplication table (row * column):\n";
      for (const auto& row : table) {
        std::cout << " ";
        for (int v : row) std::cout << " " << v;
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

json witness_json(const FiniteGroupoid& g, const Witness& w) {
  return {{"kind", to_string(w.kind)},
          {"initial_kind", to_string(w.initial_kind)},
          {"gamma1", w.gamma1 >= 0 ? g.label(w.gamma1) : ""},
          {"gamma2", w.gamma2 >= 0 ? g.label(w.gamma2) : ""},
          {"element", group_ring_json(w.element)}};
}

void print_witness(const FiniteGroupoid& g, const Witness& w) {
  std::cout << "witness kind: " << to_string(w.kind);
  if (w.initial_kind != w.kind) std::cout << " (reduced from " << to_string(w.initial_kind) << ")";
  std::cout << "\n";
  if (w.gamma1 >= 0) std::cout << "  gamma1: " << g.label(w.gamma1) << "\n";
  if (w.gamma2 >= 0) std::cout << "  gamma2: " << g.label(w.gamma2) << "\n";
  std::cout << "  element: " << group_ring_str(w.element) << "\n";
}

int run_analyze(const std::string& text, bool as_json, bool with_witness) {
  ExprInput in = build_input(text);
  AnalysisOptions options;
  options.max_full_group = cap_from_env(options.max_full_group);
  AnalysisReport r = analyze(in.groupoid, options, with_witness);

  if (as_json) {
    json j = {{"schema_version", 1},
              {"expr", to_string(in.ast)},
              {"arrows", r.arrows},
              {"units", r.units},
              {"orbits", r.orbit_count},
              {"all_isotropy", r.all_isotropy},
              {"nontrivial_isotropy_units", r.nontrivial_isotropy},
              {"is_group", r.is_group},
              {"full_group_order", r.full_group_order.get_str()},
              {"algebra_dimension", r.steinberg_dimension},
              {"image_dimension", r.image_dimension},
              {"kernel_dimension", r.kernel_dimension},
              {"injective", r.injectivity.injective},
              {"injective_reason", r.injectivity.reason},
              {"injective_oracle", r.injective_oracle},
              {"surjective", r.surjective_theorem},
              {"surjective_oracle", r.surjective_oracle},
              {"dense_in_full_algebra", r.dense_in_full_algebra},
              {"isomorphism", r.isomorphism},
              {"oracles_agree", r.oracles_agree_with_theorems}};
    if (r.witness) j["witness"] = witness_json(in.groupoid, *r.witness);
    emit(j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "groupoid " << to_string(in.ast) << "\n"
              << "  arrows / units / orbits:    " << r.arrows << " / " << r.units << " / "
              << r.orbit_count << "\n"
              << "  all isotropy:               " << yn(r.all_isotropy)
              << " (nontrivial isotropy at " << r.nontrivial_isotropy << " units)\n"
              << "  group:                      " << yn(r.is_group) << "\n"
              << "  full group order:           " << r.full_group_order.get_str() << "\n"
              << "  algebra dimension:          " << r.steinberg_dimension << "\n"
              << "  image / kernel dimension:   " << r.image_dimension << " / "
              << r.kernel_dimension << "\n"
              << "  injective:                  " << yn(r.injectivity.injective) << " -- "
              << r.injectivity.reason << "\n"
              << "  surjective:                 " << yn(r.surjective_theorem) << "\n"
              << "  dense in full algebra:      " << yn(r.dense_in_full_algebra) << "\n"
              << "  isomorphism:                " << yn(r.isomorphism) << "\n"
              << "  oracle agreement:           " << yn(r.oracles_agree_with_theorems) << "\n";
    if (r.witness) print_witness(in.groupoid, *r.witness);
  }
  return r.oracles_agree_with_theorems ? kExitOk : kExitDisagreement;
}

int run_witness(const std::string& text, bool as_json) {
  ExprInput in = build_input(text);
  Witness w = noninjectivity_witness(in.groupoid);  // throws when injective
  SteinbergElement image = pi(w.element);
  bool certified = !w.element.is_zero() && image.is_zero();
  if (!certified) throw std::logic_error("witness failed its certificate");
  if (as_json) {
    json j = witness_json(in.groupoid, w);
    j["schema_version"] = 1;
    j["expr"] = to_string(in.ast);
    j["certified"] = true;
    emit(j);
  } else {
    print_witness(in.groupoid, w);
    std::cout << "  certificate: element nonzero, image zero\n";
  }
  return kExitOk;
}

int run_tmatrix(const std::string& text, const std::string& element_text, bool as_json) {
  ExprInput in = build_input(text);
  SteinbergElement f = parse_element(in.groupoid, element_text);
  ComplexMatrix t = t_matrix(f);
  const int n = in.groupoid.num_units();

  std::vector<std::string> row_sums, col_sums;
  for (int i = 0; i < n; ++i) row_sums.push_back(t.row_sum(i).str());
  for (int j = 0; j < n; ++j) col_sums.push_back(t.col_sum(j).str());

  if (as_json) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(t.at(i, j).str());
      rows.push_back(row);
    }
    emit({{"schema_version", 1},
          {"expr", to_string(in.ast)},
          {"element", element_text},
          {"matrix", rows},
          {"row_sums", row_sums},
          {"col_sums", col_sums}});
  } else {
    std::cout << "fiber-sum matrix (" << n << " x " << n << "):\n";
    for (int i = 0; i < n; ++i) {
      std::cout << " ";
      for (int j = 0; j < n; ++j) std::cout << " " << t.at(i, j).str();
      std::cout << "\n";
    }
    std::cout << "row sums: " << join(row_sums, " ") << "\n";
    std::cout << "col sums: " << join(col_sums, " ") << "\n";
  }
  return kExitOk;
}

int run_f2_bounds(int n_max, int radius, bool as_json, bool csv, std::uint64_t chain_n) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
  if (radius < 1 || radius > 9) throw std::invalid_argument("--radius must lie in 1..9");

  if (chain_n > 0) {
    f2::BoundChainReport chain = f2::bound_chain_check(chain_n);
    if (as_json) {
      json links = json::array();
      for (const f2::BoundLink& l : chain.links) {
        links.push_back({{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"ok", l.ok}});
      }
      emit({{"schema_version", 1},
            {"n", chain.n},
            {"log3_ceiling", chain.c},
            {"links", links},
            {"all_ok", chain.all_ok}});
    } else {
      std::printf("bound chain at n=%llu (ceil log3 = %d):\n",
                  static_cast<unsigned long long>(chain.n), chain.c);
      for (const f2::BoundLink& l : chain.links) {
        std::printf("  %-24s %.6f <= %.6f  %s\n", l.name.c_str(), l.lhs, l.rhs,
                    l.ok ? "ok" : "VIOLATED");
      }
    }
    return chain.all_ok ? kExitOk : kExitDisagreement;
  }

  const std::uint64_t ball = f2::ball_size(radius);
  const int computable = static_cast<int>(std::min<std::uint64_t>(n_max, ball));
  std::vector<double> norms = f2::psi_truncated_norms(computable, radius);

  std::vector<json> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    json row = {{"n", n},
                {"haagerup_rhs", f2::haagerup_rhs(f2::psi(n))},
                {"paper_bound", f2::paper_bound(n)}};
    if (n <= computable) row["truncated_norm"] = norms[n - 1];
    rows.push_back(std::move(row));
  }

  if (as_json) {
    emit({{"schema_version", 1}, {"radius", radius}, {"rows", rows}});
  } else if (csv) {
    std::printf("n,haagerup_rhs,paper_bound,truncated_norm\n");
    for (const json& row : rows) {
      std::printf("%d,%.12g,%.12g,", row["n"].get<int>(), row["haagerup_rhs"].get<double>(),
                  row["paper_bound"].get<double>());
      if (row.contains("truncated_norm")) std::printf("%.12g", row["truncated_norm"].get<double>());
      std::printf("\n");
    }
  } else {
    std::printf("%6s  %14s  %12s  %20s\n", "n", "haagerup_rhs", "paper_bound", "truncated_norm");
    for (const json& row : rows) {
      std::printf("%6d  %14.6f  %12.6f  ", row["n"].get<int>(),
                  row["haagerup_rhs"].get<double>(), row["paper_bound"].get<double>());
      if (row.contains("truncated_norm")) {
        std::printf("%20.6f\n", row["truncated_norm"].get<double>());
      } else {
        std::printf("%20s\n", "-");
      }
    }
  }
  return kExitOk;
}

int run_verify_cmd(std::uint64_t seed, int count, int size_cap, int pairs, bool as_json) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  spec.size_cap = size_cap;
  spec.full_group_cap = cap_from_env(spec.full_group_cap);
  VerifySummary summary = run_verify(spec, pairs);
  if (as_json) {
    emit(summary.to_json());
  } else {
    std::cout << summary.table();
  }
  return summary.all_ok() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite discrete groupoids, their full groups of "
               "bisections, and the associated convolution algebras"};
  app.require_subcommand(1);

  std::string expr_text, element_text;
  bool as_json = false, cayley = false, with_witness = false, csv = false;
  int n_max = 100, radius = 9;
  std::uint64_t chain_n = 0, seed = 1;
  int count = 50, size_cap = 24, pairs = 32;

  CLI::App* validate = app.add_subcommand("validate", "check the groupoid axioms");
  validate->add_option("expr", expr_text, "groupoid description")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  CLI::App* full_group = app.add_subcommand("full-group", "enumerate the full group of bisections");
  full_group->add_option("expr", expr_text, "groupoid description")->required();
  full_group->add_flag("--json", as_json, "machine-readable output");
  full_group->add_flag("--cayley", cayley, "also print the multiplication table");

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "run the exact representation analysis");
  analyze_cmd->add_option("expr", expr_text, "groupoid description")->required();
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");
  analyze_cmd->add_flag("--witness", with_witness, "include a noninjectivity witness if one exists");

  CLI::App* witness = app.add_subcommand("witness", "construct a certified noninjectivity witness");
  witness->add_option("expr", expr_text, "groupoid description")->required();
  witness->add_flag("--json", as_json, "machine-readable output");

  CLI::App* tmatrix = app.add_subcommand("tmatrix", "fiber-sum matrix of an algebra element");
  tmatrix->add_option("expr", expr_text, "groupoid description")->required();
  tmatrix->add_option("element", element_text,
                      "element expression, e.g. \"ind[a0_1] - 3/2*unit\"")->required();
  tmatrix->add_flag("--json", as_json, "machine-readable output");

  CLI::App* f2_bounds = app.add_subcommand("f2-bounds",
                                           "free-group averages: norm bounds and truncations");
  f2_bounds->add_option("--n-max", n_max, "largest average length to tabulate");
  f2_bounds->add_option("--radius", radius, "truncation radius (1..9)");
  f2_bounds->add_flag("--csv", csv, "CSV output");
  f2_bounds->add_flag("--json", as_json, "machine-readable output");
  f2_bounds->add_option("--chain", chain_n, "print the bound chain at this n instead of the table");

  CLI::App* verify = app.add_subcommand("verify", "run the corpus falsification suite");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--count", count, "corpus size");
  verify->add_option("--size-cap", size_cap, "largest arrow count per member");
  verify->add_option("--pairs", pairs, "random pairs per member");
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(expr_text, as_json);
    if (full_group->parsed()) return run_full_group(expr_text, as_json, cayley);
    if (analyze_cmd->parsed()) return run_analyze(expr_text, as_json, with_witness);
    if (witness->parsed()) return run_witness(expr_text, as_json);
    if (tmatrix->parsed()) return run_tmatrix(expr_text, element_text, as_json);
    if (f2_bounds->parsed()) return run_f2_bounds(n_max, radius, as_json, csv, chain_n);
    if (verify->parsed()) return run_verify_cmd(seed, count, size_cap, pairs, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
