#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ridom/graph.hpp"

namespace ridom {

// Prufer sequence of length n-2 over {0,...,n-1}; the classic bijection with
// labeled trees on n >= 2 vertices.
struct TreeCode {
  std::vector<int> seq;
};

Graph prufer_decode(const TreeCode& code, int n);
TreeCode prufer_encode(const Graph& tree);

// n^(n-2) for n >= 2 (1 for n = 2).
std::uint64_t labeled_tree_count(int n);

// Index -> code, treating the sequence as base-n digits, most significant
// first.
TreeCode prufer_unrank(int n, std::uint64_t index);

// All labeled trees on n vertices, 2 <= n <= 12, in unrank order.
void enumerate_trees(int n, const std::function<void(const Graph&)>& visit);

}  // namespace ridom
