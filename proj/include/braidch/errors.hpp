#pragma once

#include <stdexcept>
#include <string>

namespace braidch {

// Enumeration or scan would exceed a configured budget cap.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A numeric hypothesis failed: degenerate critical point, separation
// violation, ambiguous flow capture, or an unexpected critical-point count.
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidch
