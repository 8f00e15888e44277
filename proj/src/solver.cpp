#include "ridom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "ridom/mis.hpp"

namespace ridom {

namespace {

constexpr std::uint8_t kUnassigned = 0xFF;

// Branch-and-bound state for one (connected or not) graph. All storage is
// fixed-size; nothing allocates inside the recursion.
struct RikSearch {
  int n = 0;
  int k = 0;
  std::uint64_t adj[kMaxVertices];
  int deg[kMaxVertices];
  int order_[kMaxVertices];

  std::uint8_t label[kMaxVertices];
  std::uint64_t classes[kMaxVertices + 1];  // classes[0] = zero-assigned
  std::uint64_t unassigned = 0;
  int nonzero = 0;
  int lowdeg_unassigned = 0;  // unassigned vertices that can never be zero
  int floor_bound = 0;        // min(n, k)
  int max_color_used = 0;

  int best = 0;
  std::uint64_t nodes = 0;

  void init(const Graph& g, int k_) {
    n = g.order();
    k = k_;
    unassigned = g.vertex_mask();
    nonzero = 0;
    lowdeg_unassigned = 0;
    max_color_used = 0;
    floor_bound = n < k ? n : k;
    for (int v = 0; v < n; ++v) {
      adj[v] = g.neighbors(v);
      deg[v] = std::popcount(adj[v]);
      order_[v] = v;
      label[v] = kUnassigned;
      if (deg[v] < k) ++lowdeg_unassigned;
    }
    for (int c = 0; c <= k; ++c) classes[c] = 0;
    std::sort(order_, order_ + n, [this](int a, int b) {
      return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });
  }

  int lower_bound() const {
    const int partial = nonzero + lowdeg_unassigned;
    return partial > floor_bound ? partial : floor_bound;
  }

  // u is zero-assigned (or about to be): each color still missing around u
  // needs its own labeled neighbor, so distinct missing colors need distinct
  // unassigned neighbors. `supplied` is a color just placed into N(u).
  bool zero_still_coverable(int u, std::uint64_t un_after, int supplied) const {
    const std::uint64_t nb = adj[u];
    int missing = 0;
    for (int c = 1; c <= k; ++c)
      missing += c != supplied && (nb & classes[c]) == 0;
    return missing <= std::popcount(nb & un_after);
  }

  bool assignment_feasible(int v, int val) const {
    const std::uint64_t un_after = unassigned & ~bit(v);
    if (val == 0) {
      if (deg[v] < k) return false;
      if (!zero_still_coverable(v, un_after, 0)) return false;
    } else if (adj[v] & classes[val]) {
      return false;  // color class must stay independent
    }
    for (std::uint64_t m = classes[0] & adj[v]; m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      if (!zero_still_coverable(u, un_after, val)) return false;
    }
    return true;
  }

  void assign(int v, int val) {
    label[v] = static_cast<std::uint8_t>(val);
    unassigned &= ~bit(v);
    classes[val] |= bit(v);
    if (val) {
      ++nonzero;
      if (val > max_color_used) max_color_used = val;
    }
    if (deg[v] < k) --lowdeg_unassigned;
  }

  void undo(int v, int val, int prev_max_color) {
    label[v] = kUnassigned;
    unassigned |= bit(v);
    classes[val] &= ~bit(v);
    if (val) --nonzero;
    max_color_used = prev_max_color;
    if (deg[v] < k) ++lowdeg_unassigned;
  }

  // Full recheck of both validity conditions; the final arbiter at leaves.
  bool complete_valid() const {
    for (int c = 1; c <= k; ++c)
      for (std::uint64_t m = classes[c]; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (adj[v] & classes[c]) return false;
      }
    for (std::uint64_t m = classes[0]; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      for (int c = 1; c <= k; ++c)
        if ((adj[v] & classes[c]) == 0) return false;
    }
    return true;
  }

  void minimize(int depth) {
    ++nodes;
    if (lower_bound() >= best) return;
    if (depth == n) {
      if (complete_valid()) best = nonzero;
      return;
    }
    const int v = order_[depth];
    if (assignment_feasible(v, 0)) {
      assign(v, 0);
      minimize(depth + 1);
      undo(v, 0, max_color_used);
    }
    const int cmax = max_color_used + 1 < k ? max_color_used + 1 : k;
    for (int c = 1; c <= cmax; ++c) {
      if (!assignment_feasible(v, c)) continue;
      const int prev = max_color_used;
      assign(v, c);
      minimize(depth + 1);
      undo(v, c, prev);
    }
  }

  // First valid completion of weight `target` in index order, labels tried
  // ascending: the lexicographically smallest optimum (which always uses
  // colors in first-use order, so the canonical restriction keeps it).
  bool lex_smallest(int depth, int target) {
    ++nodes;
    if (lower_bound() > target) return false;
    if (depth == n) return complete_valid();
    const int v = depth;
    const int cmax = max_color_used + 1 < k ? max_color_used + 1 : k;
    for (int val = 0; val <= cmax; ++val) {
      if (!assignment_feasible(v, val)) continue;
      const int prev = max_color_used;
      assign(v, val);
      if (lex_smallest(depth + 1, target)) return true;
      undo(v, val, prev);
    }
    return false;
  }

  bool enumerate(int depth, int target,
                 const std::function<bool(const RikLabeling&)>& visit) {
    if (lower_bound() > target) return true;
    if (depth == n) {
      if (nonzero != target || !complete_valid()) return true;
      RikLabeling f;
      f.k = k;
      f.labels.assign(label, label + n);
      return visit(f);
    }
    const int v = depth;
    for (int val = 0; val <= k; ++val) {
      if (!assignment_feasible(v, val)) continue;
      const int prev = max_color_used;
      assign(v, val);
      const bool keep_going = enumerate(depth + 1, target, visit);
      undo(v, val, prev);
      if (!keep_going) return false;
    }
    return true;
  }
};

// Smallest-feasible-color proper coloring; for max degree < k this is the
// lexicographically smallest labeling of weight n.
RikLabeling greedy_coloring_labeling(const Graph& g, int k) {
  RikLabeling f;
  f.k = k;
  f.labels.assign(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) {
    unsigned used = 0;
    for (std::uint64_t m = g.neighbors(v) & (bit(v) - 1); m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      used |= 1u << f.labels[u];
    }
    int c = 1;
    while (used & (1u << c)) ++c;
    f.labels[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c);
  }
  return f;
}

struct ConnectedSolve {
  int value = 0;
  std::vector<std::uint8_t> labels;  // empty when witness not requested
  std::uint64_t nodes = 0;
};

ConnectedSolve solve_component(const Graph& g, int k, const SolveOptions& opts) {
  ConnectedSolve out;
  const int n = g.order();
  if (n == 0) return out;

  if (g.max_degree() < k) {
    out.value = n;
    if (opts.want_witness) out.labels = greedy_coloring_labeling(g, k).labels;
    return out;
  }

  const int upper = partial_gid_bound(g, k, opts.strategy).first;
  const int lower = degree_lower_bound(g, k);

  RikSearch search;
  search.init(g, k);
  // The GID labeling witnesses `upper`, so the search only has to look for
  // strictly better completions.
  search.best = upper;
  if (lower < upper) search.minimize(0);
  out.value = search.best;
  out.nodes = search.nodes;

  if (opts.want_witness) {
    RikSearch wit;
    wit.init(g, k);
    const bool found = wit.lex_smallest(0, out.value);
    if (!found) throw std::logic_error("witness reconstruction failed");
    out.labels.assign(wit.label, wit.label + n);
    out.nodes += wit.nodes;
  }
  return out;
}

}  // namespace

SolveResult solve_rik(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 1) throw std::invalid_argument("solve_rik needs k >= 1");
  const auto t0 = std::chrono::steady_clock::now();

  SolveResult res;
  const int n = g.order();
  res.stats.root_lower = degree_lower_bound(g, k);
  res.stats.root_upper = partial_gid_bound(g, k, opts.strategy).first;

  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
  if (n > 0) {
    const auto comps = connected_components(g);
    if (comps.size() == 1) {
      ConnectedSolve cs = solve_component(g, k, opts);
      res.value = cs.value;
      res.stats.nodes = cs.nodes;
      labels = std::move(cs.labels);
    } else {
      for (const auto mask : comps) {
        std::vector<int> ids;
        const Graph sub = induced_subgraph(g, mask, &ids);
        ConnectedSolve cs = solve_component(sub, k, opts);
        res.value += cs.value;
        res.stats.nodes += cs.nodes;
        for (std::size_t i = 0; i < cs.labels.size(); ++i)
          labels[static_cast<std::size_t>(ids[i])] = cs.labels[i];
      }
    }
  }

  if (opts.want_witness) {
    RikLabeling f;
    f.k = k;
    f.labels = std::move(labels);
    res.witness = std::move(f);
  }
  res.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return res;
}

void for_each_optimal_rik(
    const Graph& g, int k,
    const std::function<bool(const RikLabeling&)>& visit) {
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  if (g.order() > 12)
    throw GuardExceeded("optimum enumeration guarded at n <= 12, got n = " +
                        std::to_string(g.order()));
  if (g.order() == 0) {
    visit(RikLabeling{k, {}});
    return;
  }
  SolveOptions opts;
  opts.want_witness = false;
  const int target = solve_rik(g, k, opts).value;

  RikSearch search;
  search.init(g, k);
  search.enumerate(0, target, visit);
}

std::vector<RikLabeling> enumerate_optimal_rik(const Graph& g, int k,
                                               std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("cap must be positive");
  std::vector<RikLabeling> out;
  for_each_optimal_rik(g, k, [&out, cap](const RikLabeling& f) {
    out.push_back(f);
    return out.size() < cap;
  });
  return out;
}

}  // namespace ridom
