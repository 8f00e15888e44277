#include "ridom/prufer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ridom {

Graph prufer_decode(const TreeCode& code, int n) {
  if (n < 2) throw std::invalid_argument("trees need n >= 2");
  if (static_cast<int>(code.seq.size()) != n - 2)
    throw std::invalid_argument("sequence length must be n-2");
  for (int s : code.seq)
    if (s < 0 || s >= n) throw std::invalid_argument("sequence digit out of range");

  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (int s : code.seq) ++remaining[static_cast<std::size_t>(s)];

  Graph tree(n);
  for (int s : code.seq) {
    int leaf = 0;
    while (remaining[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    tree.add_edge(leaf, s);
    remaining[static_cast<std::size_t>(leaf)] = 0;
    --remaining[static_cast<std::size_t>(s)];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (remaining[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
  tree.add_edge(a, b);
  return tree;
}

TreeCode prufer_encode(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
  const int n = tree.order();
  TreeCode code;
  if (n < 2) throw std::invalid_argument("trees need n >= 2");

  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> nbrs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = tree.degree(v);
    nbrs[static_cast<std::size_t>(v)] = tree.neighbors(v);
  }
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    const int parent = std::countr_zero(nbrs[static_cast<std::size_t>(leaf)]);
    code.seq.push_back(parent);
    deg[static_cast<std::size_t>(leaf)] = 0;
    --deg[static_cast<std::size_t>(parent)];
    nbrs[static_cast<std::size_t>(parent)] &= ~bit(leaf);
    nbrs[static_cast<std::size_t>(leaf)] = 0;
  }
  return code;
}

std::uint64_t labeled_tree_count(int n) {
  if (n < 2) throw std::invalid_argument("trees need n >= 2");
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

TreeCode prufer_unrank(int n, std::uint64_t index) {
  TreeCode code;
  code.seq.assign(static_cast<std::size_t>(n - 2), 0);
  for (int pos = n - 3; pos >= 0; --pos) {
    code.seq[static_cast<std::size_t>(pos)] =
        static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return code;
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("tree enumeration supports 2 <= n <= 12");
  const std::uint64_t count = labeled_tree_count(n);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    visit(prufer_decode(prufer_unrank(n, idx), n));
}

}  // namespace ridom
