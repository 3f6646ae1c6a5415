#include "fullgroup/expr.hpp"

#include <cctype>
#include <utility>

#include "fullgroup/groupoid_json.hpp"

namespace fullgroup {

bool GroupoidExpr::operator==(const GroupoidExpr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Sym:
    case Kind::Pair:
      return arg == o.arg;
    case Kind::File:
      return path == o.path;
    case Kind::Union:
    case Kind::Product:
      return *left == *o.left && *right == *o.right;
  }
  return false;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos); }

  bool try_literal(const char* lit) {
    skip_ws();
    std::size_t i = pos;
    for (const char* p = lit; *p; ++p, ++i) {
      if (i >= text.size() || text[i] != *p) return false;
    }
    pos = i;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  GroupoidExpr parse_binary(GroupoidExpr::Kind kind) {
    expect('(');
    GroupoidExpr e;
    e.kind = kind;
    e.left = std::make_unique<GroupoidExpr>(parse());
    expect(',');
    e.right = std::make_unique<GroupoidExpr>(parse());
    expect(')');
    return e;
  }

  GroupoidExpr parse() {
    skip_ws();
    GroupoidExpr e;
    if (try_literal("group:cyclic:")) {
      e.kind = GroupoidExpr::Kind::Cyclic;
      e.arg = parse_int();
    } else if (try_literal("group:sym:")) {
      e.kind = GroupoidExpr::Kind::Sym;
      e.arg = parse_int();
    } else if (try_literal("pair:")) {
      e.kind = GroupoidExpr::Kind::Pair;
      e.arg = parse_int();
    } else if (try_literal("union")) {
      e = parse_binary(GroupoidExpr::Kind::Union);
    } else if (try_literal("product")) {
      e = parse_binary(GroupoidExpr::Kind::Product);
    } else if (try_literal("file:")) {
      e.kind = GroupoidExpr::Kind::File;
      // The path runs to the next top-level ',' or ')'; trailing whitespace is
      // trimmed so file: nodes can appear inside union(...) arguments.
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
      std::size_t end = pos;
      while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
      if (end == start) fail("expected a file path");
      e.path = text.substr(start, end - start);
    } else {
      fail("expected group:cyclic:n, group:sym:n, pair:k, union(...), product(...), or file:path");
    }
    return e;
  }
};

}  // namespace

GroupoidExpr parse_expr(const std::string& text) {
  Parser p{text};
  GroupoidExpr e = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return e;
}

std::string to_string(const GroupoidExpr& e) {
  switch (e.kind) {
    case GroupoidExpr::Kind::Cyclic:
      return "group:cyclic:" + std::to_string(e.arg);
    case GroupoidExpr::Kind::Sym:
      return "group:sym:" + std::to_string(e.arg);
    case GroupoidExpr::Kind::Pair:
      return "pair:" + std::to_string(e.arg);
    case GroupoidExpr::Kind::File:
      return "file:" + e.path;
    case GroupoidExpr::Kind::Union:
      return "union(" + to_string(*e.left) + "," + to_string(*e.right) + ")";
    case GroupoidExpr::Kind::Product:
      return "product(" + to_string(*e.left) + "," + to_string(*e.right) + ")";
  }
  throw std::logic_error("unreachable expression kind");
}

FiniteGroupoid build(const GroupoidExpr& e) {
  switch (e.kind) {
    case GroupoidExpr::Kind::Cyclic:
      return make_cyclic_group(e.arg);
    case GroupoidExpr::Kind::Sym:
      return make_symmetric_group(e.arg);
    case GroupoidExpr::Kind::Pair:
      return make_pair_groupoid(e.arg);
    case GroupoidExpr::Kind::File: {
      FiniteGroupoid g = load_groupoid_file(e.path);
      ValidationReport report = g.validate();
      if (!report.ok) {
        throw std::invalid_argument("groupoid in " + e.path +
                                    " fails validation: " + report.message);
      }
      return g;
    }
    case GroupoidExpr::Kind::Union:
      return disjoint_union(build(*e.left), build(*e.right));
    case GroupoidExpr::Kind::Product:
      return product(build(*e.left), build(*e.right));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace fullgroup
