#include "ridom/bounds.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace ridom {

RikLabeling PartialGid::to_labeling(int n) const {
  RikLabeling f;
  f.k = k;
  f.labels.assign(static_cast<std::size_t>(n), 0);
  for (int c = 1; c <= k; ++c)
    for (std::uint64_t m = parts[static_cast<std::size_t>(c - 1)]; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      f.labels[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c);
    }
  return f;
}

namespace {

// Greedy maximal independent set among `avail`, picking by strategy.
std::uint64_t greedy_mis(const Graph& g, std::uint64_t avail,
                         GidStrategy strategy) {
  std::uint64_t chosen = 0;
  std::uint64_t open = avail;
  while (open) {
    int pick = -1;
    if (strategy == GidStrategy::ByIndex) {
      pick = std::countr_zero(open);
    } else {
      int best_deg = -1;
      for (std::uint64_t m = open; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int d = std::popcount(g.neighbors(v) & avail);
        if (d > best_deg) {
          best_deg = d;
          pick = v;
        }
      }
    }
    chosen |= bit(pick);
    open &= ~(g.neighbors(pick) | bit(pick));
  }
  return chosen;
}

}  // namespace

std::pair<int, PartialGid> partial_gid_bound(const Graph& g, int k,
                                             GidStrategy strategy) {
  if (k < 1) throw std::invalid_argument("partial GID needs k >= 1");
  PartialGid gid;
  gid.k = k;
  std::uint64_t remaining = g.vertex_mask();
  for (int c = 0; c < k; ++c) {
    const std::uint64_t part = greedy_mis(g, remaining, strategy);
    gid.parts.push_back(part);
    remaining &= ~part;
  }
  gid.parts.push_back(remaining);  // V_0
  const int bound = g.order() - std::popcount(remaining);
  return {bound, gid};
}

bool partial_gid_valid(const Graph& g, const PartialGid& gid) {
  if (static_cast<int>(gid.parts.size()) != gid.k + 1) return false;
  std::uint64_t seen = 0;
  for (const auto part : gid.parts) {
    if (part & seen) return false;  // parts must be disjoint
    seen |= part;
  }
  if (seen != g.vertex_mask()) return false;

  std::uint64_t remaining = g.vertex_mask();
  for (int c = 0; c < gid.k; ++c) {
    const std::uint64_t part = gid.parts[static_cast<std::size_t>(c)];
    if (part & ~remaining) return false;
    // Independent...
    for (std::uint64_t m = part; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (g.neighbors(v) & part) return false;
    }
    // ...and maximal within the remaining graph.
    for (std::uint64_t m = remaining & ~part; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if ((g.neighbors(v) & part) == 0) return false;
    }
    remaining &= ~part;
  }
  return remaining == gid.remainder();
}

int degree_lower_bound(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  const int n = g.order();
  int low_degree = 0;
  for (int v = 0; v < n; ++v) low_degree += g.degree(v) < k;
  const int floor = n < k ? n : k;
  return low_degree > floor ? low_degree : floor;
}

bool check_value_k_characterization(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  if (n < k) throw std::invalid_argument("characterization needs n >= k");
  if (!is_connected(g)) throw std::invalid_argument("connected input required");
  if (n == k) return true;

  // Candidate partite-set members must reach every vertex outside a k-set.
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= n - k) candidates.push_back(v);
  if (static_cast<int>(candidates.size()) < k) return false;

  const std::uint64_t all = g.vertex_mask();
  std::vector<int> pick(static_cast<std::size_t>(k));
  // Exhaustive over k-subsets of the candidates (k <= 3 in all scans).
  const int c = static_cast<int>(candidates.size());
  auto covers = [&](std::uint64_t set_mask) {
    for (std::uint64_t m = set_mask; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if ((g.neighbors(v) | set_mask) != all) return false;
    }
    return true;
  };
  std::function<bool(int, int, std::uint64_t)> rec = [&](int idx, int from,
                                                         std::uint64_t mask) {
    if (idx == k) return covers(mask);
    for (int i = from; i < c; ++i)
      if (rec(idx + 1, i + 1, mask | bit(candidates[static_cast<std::size_t>(i)])))
        return true;
    return false;
  };
  return rec(0, 0, 0);
}

}  // namespace ridom
