#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "fullgroup/groupoid.hpp"

namespace fullgroup {

/// Parse failure with the offset into the input where it happened.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// Groupoid description AST:
///   group:cyclic:n | group:sym:n | pair:k | union(e,e) | product(e,e) | file:<path>
struct GroupoidExpr {
  enum class Kind { Cyclic, Sym, Pair, Union, Product, File };

  Kind kind;
  int arg = 0;                        // Cyclic/Sym/Pair
  std::string path;                   // File
  std::unique_ptr<GroupoidExpr> left, right;  // Union/Product

  bool operator==(const GroupoidExpr& o) const;
};

/// Parses a description; whitespace is allowed around tokens.
GroupoidExpr parse_expr(const std::string& text);

/// Canonical printer; parse_expr(to_string(e)) reproduces e.
std::string to_string(const GroupoidExpr& e);

/// Builds the groupoid (reads and validates JSON for file: nodes).
FiniteGroupoid build(const GroupoidExpr& e);

}  // namespace fullgroup
