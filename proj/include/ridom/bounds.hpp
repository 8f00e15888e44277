#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ridom/graph.hpp"
#include "ridom/labeling.hpp"

namespace ridom {

enum class GidStrategy {
  ByDegree,  // peel greedily by descending remaining degree
  ByIndex,   // peel greedily by ascending vertex index
};

// Greedy independent decomposition prefix: parts[0..k-1] are the peeled
// independent sets V_1..V_k (each maximal in the graph minus earlier parts),
// parts[k] is the remainder V_0.
struct PartialGid {
  int k = 0;
  std::vector<std::uint64_t> parts;

  std::uint64_t remainder() const { return parts.back(); }
  RikLabeling to_labeling(int n) const;
};

// Upper bound on the k-rainbow independent domination number together with
// the witnessing decomposition. When peeling exhausts the graph early the
// remainder is empty and the bound degrades to n (all vertices labeled),
// which is always attainable by the peel itself.
std::pair<int, PartialGid> partial_gid_bound(
    const Graph& g, int k, GidStrategy strategy = GidStrategy::ByDegree);

// Re-checks the PartialGid invariants independently of how it was built.
bool partial_gid_valid(const Graph& g, const PartialGid& gid);

// max(min(n,k), #{v : deg(v) < k}). Vertices of degree below k can never be
// unlabeled, isolated vertices included.
int degree_lower_bound(const Graph& g, int k);

// True iff n == k or some k-subset S has every outside vertex adjacent to
// all of S (a spanning complete bipartite K_{k,n-k}). Connected input only.
bool check_value_k_characterization(const Graph& g, int k);

}  // namespace ridom
