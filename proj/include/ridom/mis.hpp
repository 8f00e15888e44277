#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ridom/graph.hpp"
#include "ridom/labeling.hpp"

namespace ridom {

// Visits every maximal independent set of g (Bron-Kerbosch with pivoting on
// the complement). Return false from the callback to stop early.
void for_each_maximal_independent_set(
    const Graph& g, const std::function<bool(std::uint64_t)>& visit);

struct MisSummary {
  int min_maximal = 0;   // i(G)
  int max_size = 0;      // alpha(G)
  std::uint64_t count = 0;
  std::uint64_t smallest = 0;  // lexicographically-least minimum witness mask
};

MisSummary scan_maximal_independent_sets(const Graph& g);

// i(G): minimum size of a maximal independent set. The witness comes back as
// a 1-rainbow labeling (members labeled 1).
struct IndependentDominationResult {
  int value = 0;
  RikLabeling witness;
  std::uint64_t sets_enumerated = 0;
};
IndependentDominationResult independent_domination_number(const Graph& g);

int independence_number(const Graph& g);

// gamma(G) by branching on the closed neighborhood of the first undominated
// vertex.
int domination_number(const Graph& g);

struct GuardExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Default cap on product order for the independent-domination oracle; the
// RIDOM_GUARD_VERTICES environment variable or an explicit override raises it.
inline constexpr int kDefaultOracleGuard = 40;

// i(G box K_k) via maximal-independent-set enumeration on the product.
int oracle_rik_via_product(const Graph& g, int k,
                           std::optional<int> guard_override = std::nullopt);

}  // namespace ridom
