#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ridom {

// Hard cap on the vertex count: adjacency rows are single 64-bit words.
// Scans stay below n = 12 and products below 64 vertices.
inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Finite simple graph on {0,...,n-1} with bitmask adjacency rows.
// Immutable by convention once built; all solvers share const references.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(int n,
                              const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1; }

  // Open neighborhood as a bitmask.
  std::uint64_t neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  // Mask with one bit per vertex.
  std::uint64_t vertex_mask() const;

  std::vector<int> degree_sequence() const;  // sorted descending

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Named families. Part sizes of CompleteMultipartite must be positive and
// nondecreasing.
struct FamilySpec {
  enum class Kind {
    Path,
    Cycle,
    Star,
    StarPlus,
    Complete,
    Empty,
    CompleteMultipartite,
  };

  Kind kind = Kind::Path;
  int order = 0;                // used by all kinds except CompleteMultipartite
  std::vector<int> parts;       // used by CompleteMultipartite

  // Parses "path:5", "cycle:6", "star:7", "starplus:4", "complete:4",
  // "empty:3", "kmulti:2,3,3".
  static FamilySpec parse(const std::string& text);
};

Graph build_family(const FamilySpec& spec);

// Convenience builders used all over the test corpus.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph star_plus_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);

// Cartesian product under the flattened indexing (g,h) -> g*|V(H)| + h.
// Witness translations elsewhere depend on this flattening.
Graph cartesian_product(const Graph& g, const Graph& h);

// The product vertex numbering, kept in one place. flatten/unflatten are
// mutually inverse for 0 <= g, 0 <= h < h_order.
constexpr int product_flatten(int g, int h, int h_order) {
  return g * h_order + h;
}
constexpr std::pair<int, int> product_unflatten(int index, int h_order) {
  return {index / h_order, index % h_order};
}

Graph complement(const Graph& g);

// Maximal connected vertex sets as bitmasks, ordered by smallest member.
std::vector<std::uint64_t> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Subgraph induced by `mask`, vertices renumbered in increasing order.
// When `old_ids` is given it receives the original index of each new vertex.
Graph induced_subgraph(const Graph& g, std::uint64_t mask,
                       std::vector<int>* old_ids = nullptr);

Graph remove_vertex(const Graph& g, int v);

// Disjoint union; vertices of `h` are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace ridom
