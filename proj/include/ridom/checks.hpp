#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ridom/graph.hpp"
#include "ridom/scan.hpp"
#include "ridom/solver.hpp"

namespace ridom {

// ---------------------------------------------------------------------------
// Per-graph checks.

struct NgVerdict {
  int value = 0;             // 2-rainbow independent domination number of G
  int complement_value = 0;  // same for the complement
  int sum = 0;
  bool within_bounds = false;  // 5 <= sum <= n+3
  bool attains_lower = false;
  bool attains_upper = false;
};

// Requires n >= 3.
NgVerdict check_nordhaus_gaddum(const Graph& g);

// i(T) strictly below the 2-rainbow independent domination number. Trees of
// order >= 2 only.
bool check_tree_theorem(const Graph& tree);

// For every leaf x, removing x changes neither invariant by more than one.
bool check_leaf_lemmas(const Graph& tree);

// Every degree-1 vertex is labeled in every optimal 2-labeling. Requires no
// isolated vertices; enumeration-guarded (n <= 12).
bool check_leaf_observation(const Graph& g);

// Value n exactly when all components are K_1 or K_2; in that case the
// complement solves to 2 (order >= 2).
bool check_components_lemma(const Graph& g);

// A universal vertex plus value n-1 forces a star or a star with one extra
// edge between two outer vertices. Requires n >= 3.
bool check_star_lemma(const Graph& g);

// When i(G) equals the k-rainbow independent domination number, the labeled
// classes of every optimum union to an independent set. n <= 12.
bool check_corollary_independence(const Graph& g, int k);

// ---------------------------------------------------------------------------
// Scans.

struct ScanSettings {
  ScanExec exec;
  const Corpus* corpus = nullptr;  // override the built-in enumeration
  // Optional per-graph stream; called in index order.
  std::function<void(std::uint64_t, const Graph&, const GraphVerdict&)>
      record_sink;
};

struct FamilyMismatch {
  std::string family;
  int n = 0;
  int expected = 0;
  int actual = 0;
};

struct FamilyScanReport {
  std::uint64_t instances = 0;
  std::vector<FamilyMismatch> mismatches;
  double millis = 0.0;
  bool clean() const { return mismatches.empty(); }
};

// Closed forms for paths, cycles, stars, stars-plus-edge, complete graphs
// (all orders up to max_n) and complete multipartite graphs (part vectors
// with smallest part >= 2 totaling at most min(max_n, 10)), against the
// exact solver at k = 2.
FamilyScanReport check_family_formulas(int max_n);

// 5 <= sum <= n+3 for every corpus graph; sum 5 additionally forbidden for
// n >= 4. Attainers of both bounds are collected. 3 <= n <= 8.
ScanReport scan_nordhaus_gaddum(int n, const ScanSettings& settings = {});

enum class NgBound { Lower, Upper };

// Evidence collection: every corpus graph attaining the named bound.
ScanReport find_extremal(int n, NgBound target,
                         const ScanSettings& settings = {});

// Comparator for the plain 2-rainbow domination number:
// 5 <= sum <= n+2 over the corpus. Requires n >= 3.
ScanReport scan_wu_xing(int n, const ScanSettings& settings = {});

struct TreeScanPlan {
  int max_n = 10;  // full enumeration to min(max_n, 9), sampling beyond
  std::uint64_t samples = 100000;  // split across the sampled orders
  std::uint64_t seed = 0x5eed5eedULL;
};

// Tree theorem plus both leaf lemmas over every enumerated/sampled tree.
ScanReport scan_trees(const TreeScanPlan& plan,
                      const ScanSettings& settings = {});

// Component characterization, star lemma and leaf observation over one
// labeled-graph order.
ScanReport scan_lemmas(int n, const ScanSettings& settings = {});

// Corollary on independent labeled unions at one order and color count.
ScanReport scan_corollary(int n, int k, const ScanSettings& settings = {});

// Solver value vs product oracle, exact equality.
ScanReport scan_oracle_equivalence(int n, int k,
                                   const ScanSettings& settings = {});

// Structural value-k test vs (solver value == k) over connected graphs.
ScanReport scan_characterization(int n, int k,
                                 const ScanSettings& settings = {});

// Cross-invariant sanity at one order and color count: k = 1 collapse,
// sandwich, product chain, component additivity, low-degree forcing, range,
// and witness validity.
ScanReport scan_invariant_properties(int n, int k,
                                     const ScanSettings& settings = {});

}  // namespace ridom
