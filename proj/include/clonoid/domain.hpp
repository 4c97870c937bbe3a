#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clonoid/element.hpp"

namespace clonoid {

/// Budgets for bounded verification. The assignment stream is deterministic
/// given (budgets, seed).
struct TestDomain {
  size_t element_budget = 64;
  size_t index_bound = 4;
  size_t perm_bound = 4;
  uint64_t seed = 0xC0FFEEull;
  /// per law-instance cap on assignment tuples; larger products are
  /// deterministically seed-sampled
  size_t assignment_budget = 200000;
};

struct StreamResult {
  std::vector<Element> elems;
  bool exhaustive = false;
};

/// Deterministic element stream: (budget, seed) -> elements. Finite carriers
/// report exhaustive when fully enumerated within budget; infinite carriers
/// emit grade by grade, seed-shuffled within grades.
using Stream = std::function<StreamResult(size_t, uint64_t)>;

Stream finite_stream(std::vector<Element> all);

}  // namespace clonoid
