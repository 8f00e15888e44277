#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ridom/graph.hpp"

namespace ridom {

// Single-color labeling f: V -> {0,1,...,k}. Valid when every positive color
// class is independent and every 0-vertex has, for each color, a neighbor of
// that color. Weight = number of nonzero vertices.
struct RikLabeling {
  int k = 1;
  std::vector<std::uint8_t> labels;

  int weight() const;
  // Bitmask of vertices labeled c.
  std::uint64_t class_mask(int c) const;
  // Digit string for k <= 9, e.g. "10220"; array text "[10,0,...]" otherwise.
  std::string to_string() const;
};

bool verify_rik(const Graph& g, const RikLabeling& f);

// Set-valued labeling f: V -> subsets of [k], stored as bitmasks (bit i-1 for
// color i). Weight = sum of set sizes.
struct RainbowSetLabeling {
  int k = 1;
  std::vector<std::uint8_t> sets;

  int weight() const;
  std::uint64_t support_mask() const;  // vertices with nonempty label
  std::string to_string() const;       // e.g. "{1}{}{1,2}"
};

// Every empty-labeled vertex sees all k colors in its neighborhood union.
bool verify_rk(const Graph& g, const RainbowSetLabeling& f);

// verify_rk plus: the support is an independent set.
bool verify_irk(const Graph& g, const RainbowSetLabeling& f);

}  // namespace ridom
