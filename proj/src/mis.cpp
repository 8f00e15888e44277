#include "ridom/mis.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ridom {

namespace {

// Bron-Kerbosch with pivoting over "non-adjacency" rows, so maximal cliques
// of the complement = maximal independent sets of g.
struct MisEnum {
  int n;
  std::uint64_t nonadj[kMaxVertices];
  const std::function<bool(std::uint64_t)>* visit;
  bool stopped = false;

  explicit MisEnum(const Graph& g) : n(g.order()) {
    const std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < n; ++v)
      nonadj[v] = all & ~g.neighbors(v) & ~bit(v);
  }

  void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (stopped) return;
    if (p == 0 && x == 0) {
      if (!(*visit)(r)) stopped = true;
      return;
    }
    // Pivot: vertex of P|X covering most of P.
    int pivot = -1, best = -1;
    for (std::uint64_t m = p | x; m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      const int covered = std::popcount(p & nonadj[u]);
      if (covered > best) {
        best = covered;
        pivot = u;
      }
    }
    for (std::uint64_t cand = p & ~nonadj[pivot]; cand && !stopped;) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      run(r | bit(v), p & nonadj[v], x & nonadj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

}  // namespace

void for_each_maximal_independent_set(
    const Graph& g, const std::function<bool(std::uint64_t)>& visit) {
  if (g.order() == 0) {
    visit(0);  // the empty set is the unique (vacuously maximal) one
    return;
  }
  MisEnum e(g);
  e.visit = &visit;
  e.run(0, g.vertex_mask(), 0);
}

MisSummary scan_maximal_independent_sets(const Graph& g) {
  MisSummary s;
  s.min_maximal = g.order() + 1;
  for_each_maximal_independent_set(g, [&s](std::uint64_t set) {
    const int size = std::popcount(set);
    ++s.count;
    if (size > s.max_size) s.max_size = size;
    if (size < s.min_maximal ||
        (size == s.min_maximal && set < s.smallest)) {
      s.min_maximal = size;
      s.smallest = set;
    }
    return true;
  });
  if (s.count == 0) s.min_maximal = 0;  // n == 0
  return s;
}

IndependentDominationResult independent_domination_number(const Graph& g) {
  const MisSummary s = scan_maximal_independent_sets(g);
  IndependentDominationResult r;
  r.value = g.order() == 0 ? 0 : s.min_maximal;
  r.sets_enumerated = s.count;
  r.witness.k = 1;
  r.witness.labels.assign(static_cast<std::size_t>(g.order()), 0);
  for (std::uint64_t m = s.smallest; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    r.witness.labels[static_cast<std::size_t>(v)] = 1;
  }
  return r;
}

int independence_number(const Graph& g) {
  return scan_maximal_independent_sets(g).max_size;
}

namespace {

struct DomSearch {
  const Graph& g;
  std::uint64_t closed[kMaxVertices];
  int best;

  explicit DomSearch(const Graph& g_) : g(g_), best(g_.order()) {
    for (int v = 0; v < g.order(); ++v) closed[v] = g.neighbors(v) | bit(v);
  }

  void run(std::uint64_t dominated, int size) {
    if (size >= best) return;
    const std::uint64_t missing = g.vertex_mask() & ~dominated;
    if (!missing) {
      best = size;
      return;
    }
    const int v = std::countr_zero(missing);
    // Some vertex of N[v] must be picked.
    for (std::uint64_t cand = closed[v]; cand;) {
      const int u = std::countr_zero(cand);
      cand &= cand - 1;
      run(dominated | closed[u], size + 1);
    }
  }
};

}  // namespace

int domination_number(const Graph& g) {
  if (g.order() == 0) return 0;
  DomSearch s(g);
  s.run(0, 0);
  return s.best;
}

namespace {

int oracle_guard() {
  if (const char* env = std::getenv("RIDOM_GUARD_VERTICES")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultOracleGuard;
}

}  // namespace

int oracle_rik_via_product(const Graph& g, int k,
                           std::optional<int> guard_override) {
  if (k < 1) throw std::invalid_argument("oracle needs k >= 1");
  const int guard = guard_override.value_or(oracle_guard());
  if (g.order() * k > guard)
    throw GuardExceeded("product order " + std::to_string(g.order() * k) +
                        " exceeds oracle guard " + std::to_string(guard));
  if (g.order() == 0) return 0;
  const Graph prod = cartesian_product(g, complete_graph(k));
  return independent_domination_number(prod).value;
}

}  // namespace ridom
