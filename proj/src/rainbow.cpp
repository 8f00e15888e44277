#include "ridom/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace ridom {

namespace {

constexpr std::uint8_t kNoSet = 0xFF;

struct RainbowSearch {
  int n = 0;
  int k = 0;
  unsigned full = 0;
  bool independent_support = false;
  std::uint64_t adj[kMaxVertices];

  std::uint8_t sets[kMaxVertices];
  std::uint64_t unassigned = 0;
  std::uint64_t empty_assigned = 0;
  std::uint64_t support = 0;
  int weight = 0;

  int best = 0;
  std::uint8_t best_sets[kMaxVertices];
  std::uint64_t nodes = 0;

  // Branch values in the order tried by the value pass: light labels first.
  std::uint8_t by_size[1 << 8];

  void init(const Graph& g, int k_, bool indep) {
    n = g.order();
    k = k_;
    full = (1u << k) - 1;
    independent_support = indep;
    unassigned = g.vertex_mask();
    empty_assigned = support = 0;
    weight = 0;
    for (int v = 0; v < n; ++v) {
      adj[v] = g.neighbors(v);
      sets[v] = kNoSet;
    }
    int idx = 0;
    for (int size = 0; size <= k; ++size)
      for (unsigned m = 0; m <= full; ++m)
        if (std::popcount(m) == size) by_size[idx++] = static_cast<std::uint8_t>(m);
  }

  unsigned neighbor_union(int v) const {
    unsigned seen = 0;
    for (std::uint64_t m = adj[v] & ~unassigned; m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      seen |= sets[u];
    }
    return seen;
  }

  // An empty-labeled vertex stays coverable while it either already sees all
  // colors or keeps an unassigned neighbor (one set label can carry all the
  // missing colors at once).
  bool empty_still_coverable(int u, std::uint64_t un_after,
                             unsigned extra) const {
    const unsigned seen = neighbor_union(u) | extra;
    return seen == full || (adj[u] & un_after) != 0;
  }

  bool assignment_feasible(int v, unsigned set) const {
    const std::uint64_t un_after = unassigned & ~bit(v);
    if (set == 0) {
      if (!empty_still_coverable(v, un_after, 0)) return false;
    } else if (independent_support && (adj[v] & support)) {
      return false;
    }
    for (std::uint64_t m = empty_assigned & adj[v]; m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      if (!empty_still_coverable(u, un_after, set)) return false;
    }
    return true;
  }

  void assign(int v, unsigned set) {
    sets[v] = static_cast<std::uint8_t>(set);
    unassigned &= ~bit(v);
    if (set == 0)
      empty_assigned |= bit(v);
    else
      support |= bit(v);
    weight += std::popcount(set);
  }

  void undo(int v, unsigned set) {
    sets[v] = kNoSet;
    unassigned |= bit(v);
    empty_assigned &= ~bit(v);
    support &= ~bit(v);
    weight -= std::popcount(set);
  }

  bool complete_valid() const {
    if (independent_support)
      for (std::uint64_t m = support; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (adj[v] & support) return false;
      }
    for (std::uint64_t m = empty_assigned; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (neighbor_union(v) != full) return false;
    }
    return true;
  }

  void minimize(int depth) {
    ++nodes;
    if (weight >= best) return;
    if (depth == n) {
      if (complete_valid()) {
        best = weight;
        std::copy(sets, sets + n, best_sets);
      }
      return;
    }
    const int count = 1 << k;
    for (int i = 0; i < count; ++i) {
      const unsigned set = by_size[i];
      if (!assignment_feasible(depth, set)) continue;
      assign(depth, set);
      minimize(depth + 1);
      undo(depth, set);
    }
  }

  // First valid completion at exactly `target`, label masks ascending.
  bool lex_smallest(int depth, int target) {
    ++nodes;
    if (weight > target) return false;
    if (depth == n) return weight == target && complete_valid();
    for (unsigned set = 0; set <= full; ++set) {
      if (!assignment_feasible(depth, set)) continue;
      assign(depth, set);
      if (lex_smallest(depth + 1, target)) return true;
      undo(depth, set);
    }
    return false;
  }
};

RainbowResult solve_rainbow(const Graph& g, int k, bool want_witness,
                            bool independent_support) {
  if (k < 1 || k > 8)
    throw std::invalid_argument("set-labeling solvers support 1 <= k <= 8");
  const auto t0 = std::chrono::steady_clock::now();

  RainbowResult res;
  const int n = g.order();
  if (n == 0) {
    if (want_witness) res.witness = RainbowSetLabeling{k, {}};
    return res;
  }

  // Achievable start: label everything {1} (plain), or a greedy maximal
  // independent set with [k] (independent support).
  int start;
  if (!independent_support) {
    start = n;
  } else {
    std::uint64_t open = g.vertex_mask(), mis = 0;
    while (open) {
      const int v = std::countr_zero(open);
      mis |= bit(v);
      open &= ~(g.neighbors(v) | bit(v));
    }
    start = k * std::popcount(mis);
  }

  RainbowSearch search;
  search.init(g, k, independent_support);
  search.best = start + 1;
  search.minimize(0);
  res.value = std::min(search.best, start);
  res.stats.nodes = search.nodes;
  res.stats.root_upper = start;
  // Either some vertex is empty (its neighborhood carries all k colors) or
  // none is (weight n), so min(n,k) is always a floor.
  res.stats.root_lower = std::min(n, k);

  if (want_witness) {
    RainbowSearch wit;
    wit.init(g, k, independent_support);
    wit.best = res.value + 1;
    if (!wit.lex_smallest(0, res.value))
      throw std::logic_error("rainbow witness reconstruction failed");
    RainbowSetLabeling f;
    f.k = k;
    f.sets.assign(wit.sets, wit.sets + n);
    res.witness = std::move(f);
    res.stats.nodes += wit.nodes;
  }

  res.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return res;
}

}  // namespace

RainbowResult rainbow_domination_number(const Graph& g, int k,
                                        bool want_witness) {
  return solve_rainbow(g, k, want_witness, false);
}

RainbowResult independent_rainbow_domination_number(const Graph& g, int k,
                                                    bool want_witness) {
  return solve_rainbow(g, k, want_witness, true);
}

}  // namespace ridom
