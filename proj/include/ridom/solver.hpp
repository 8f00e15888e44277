#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ridom/bounds.hpp"
#include "ridom/graph.hpp"
#include "ridom/labeling.hpp"

namespace ridom {

struct SearchStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
  int root_lower = 0;
  int root_upper = 0;
};

struct SolveOptions {
  bool want_witness = true;
  GidStrategy strategy = GidStrategy::ByDegree;
};

struct SolveResult {
  int value = 0;
  std::optional<RikLabeling> witness;  // lexicographically smallest optimum
  SearchStats stats;
};

// Exact k-rainbow independent domination number. Branch and bound over
// vertices in descending-degree order, zero tried first, interchangeable
// colors canonicalized by first use. Disconnected inputs are solved per
// component and summed.
SolveResult solve_rik(const Graph& g, int k, const SolveOptions& opts = {});

// All minimum-weight valid labelings (no symmetry reduction), up to `cap`.
// Guarded at n <= 12.
std::vector<RikLabeling> enumerate_optimal_rik(const Graph& g, int k,
                                               std::size_t cap);

// Streaming form: `visit` sees every optimum; return false to stop early.
// Same n <= 12 guard.
void for_each_optimal_rik(const Graph& g, int k,
                          const std::function<bool(const RikLabeling&)>& visit);

}  // namespace ridom
