#pragma once

// Brute-force reference implementations used only by tests. Everything here
// works straight from the definitions over explicit subset/labeling
// enumerations, independent of the library's search code.

#include <cstdint>
#include <string>
#include <vector>

#include "ridom/graph.hpp"

namespace testoracle {

using ridom::Graph;

// All (k+1)^n single-color labelings, conditions checked literally.
inline int rik_bruteforce(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  int best = n + 1;
  while (true) {
    bool valid = true;
    for (int u = 0; u < n && valid; ++u)
      for (int v = u + 1; v < n && valid; ++v)
        if (g.has_edge(u, v) && f[u] != 0 && f[u] == f[v]) valid = false;
    for (int v = 0; v < n && valid; ++v) {
      if (f[v] != 0) continue;
      for (int c = 1; c <= k && valid; ++c) {
        bool seen = false;
        for (int u = 0; u < n; ++u)
          if (g.has_edge(u, v) && f[u] == c) seen = true;
        if (!seen) valid = false;
      }
    }
    if (valid) {
      int w = 0;
      for (int v = 0; v < n; ++v) w += f[v] != 0;
      if (w < best) best = w;
    }
    int pos = 0;
    while (pos < n && f[pos] == k) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  return best == n + 1 ? n : best;  // n = 0 gives 0 via the empty labeling
}

// All (2^k)^n set labelings.
inline int rk_bruteforce(const Graph& g, int k, bool independent_support) {
  const int n = g.order();
  const int top = 1 << k;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  int best = -1;
  while (true) {
    bool valid = true;
    if (independent_support)
      for (int u = 0; u < n && valid; ++u)
        for (int v = u + 1; v < n && valid; ++v)
          if (g.has_edge(u, v) && f[u] != 0 && f[v] != 0) valid = false;
    for (int v = 0; v < n && valid; ++v) {
      if (f[v] != 0) continue;
      int seen = 0;
      for (int u = 0; u < n; ++u)
        if (g.has_edge(u, v)) seen |= f[u];
      if (seen != top - 1) valid = false;
    }
    if (valid) {
      int w = 0;
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) w += (f[v] >> c) & 1;
      if (best < 0 || w < best) best = w;
    }
    int pos = 0;
    while (pos < n && f[pos] == top - 1) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  return best < 0 ? 0 : best;
}

inline bool subset_independent(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (((s >> u) & 1) && ((s >> v) & 1) && g.has_edge(u, v)) return false;
  return true;
}

inline bool subset_dominating(const Graph& g, std::uint64_t s) {
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1) continue;
    bool covered = false;
    for (int u = 0; u < g.order(); ++u)
      if (((s >> u) & 1) && g.has_edge(u, v)) covered = true;
    if (!covered) return false;
  }
  return true;
}

// Minimum independent dominating set over all subsets.
inline int i_bruteforce(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (subset_independent(g, s) && subset_dominating(g, s)) {
      int size = 0;
      for (int v = 0; v < n; ++v) size += (s >> v) & 1;
      if (size < best) best = size;
    }
  return best;
}

inline int alpha_bruteforce(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (subset_independent(g, s)) {
      int size = 0;
      for (int v = 0; v < n; ++v) size += (s >> v) & 1;
      if (size > best) best = size;
    }
  return best;
}

// Subsets by increasing size.
inline int gamma_bruteforce(const Graph& g) {
  const int n = g.order();
  for (int target = 0; target <= n; ++target)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      int size = 0;
      for (int v = 0; v < n; ++v) size += (s >> v) & 1;
      if (size == target && subset_dominating(g, s)) return target;
    }
  return n;
}

// Independent graph6 encoder following the published format rules.
inline std::string graph6_reference_encode(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      bits.push_back(g.has_edge(row, col) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t at = 0; at < bits.size(); at += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[at + static_cast<std::size_t>(b)];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

}  // namespace testoracle
