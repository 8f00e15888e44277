#pragma once

#include <optional>

#include "ridom/graph.hpp"
#include "ridom/labeling.hpp"
#include "ridom/solver.hpp"

namespace ridom {

struct RainbowResult {
  int value = 0;
  std::optional<RainbowSetLabeling> witness;
  SearchStats stats;
};

// Minimum weight of a set labeling whose empty vertices see all k colors.
// Backtracking over set labels; witness is the vector whose label masks are
// lexicographically smallest (empty < {1} < {2} < {1,2} < ...). k <= 8.
RainbowResult rainbow_domination_number(const Graph& g, int k,
                                        bool want_witness = true);

// Same search restricted to labelings with independent support.
RainbowResult independent_rainbow_domination_number(const Graph& g, int k,
                                                    bool want_witness = true);

}  // namespace ridom
