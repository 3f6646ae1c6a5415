#pragma once

#include <stdexcept>
#include <string>

namespace fullgroup {

/// Thrown when an operation would exceed a configured size cap (full-group
/// enumeration, all-bisection enumeration, truncated ball radius, ...).
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fullgroup
