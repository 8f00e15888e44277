#include "ridom/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ridom {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range [0," +
                                std::to_string(kMaxVertices) + "]: " +
                                std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edge_list(int n,
                            const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    g.add_edge(u, v);  // duplicates collapse
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge");
  if (has_edge(u, v)) return;
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  ++m_;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) ds[static_cast<std::size_t>(v)] = degree(v);
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec must look like name:args: " +
                                text);
  std::string name = text.substr(0, colon);
  std::string args = text.substr(colon + 1);

  FamilySpec spec;
  auto parse_int = [](const std::string& s) {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer: " + s);
    return value;
  };

  if (name == "kmulti") {
    spec.kind = Kind::CompleteMultipartite;
    std::size_t pos = 0;
    while (pos < args.size()) {
      auto comma = args.find(',', pos);
      if (comma == std::string::npos) comma = args.size();
      spec.parts.push_back(parse_int(args.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (spec.parts.empty())
      throw std::invalid_argument("kmulti needs at least one part size");
    return spec;
  }

  if (name == "path")
    spec.kind = Kind::Path;
  else if (name == "cycle")
    spec.kind = Kind::Cycle;
  else if (name == "star")
    spec.kind = Kind::Star;
  else if (name == "starplus")
    spec.kind = Kind::StarPlus;
  else if (name == "complete")
    spec.kind = Kind::Complete;
  else if (name == "empty")
    spec.kind = Kind::Empty;
  else
    throw std::invalid_argument("unknown family: " + name);
  spec.order = parse_int(args);
  return spec;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs order >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star needs order >= 2");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph star_plus_graph(int n) {
  if (n < 3) throw std::invalid_argument("star-plus needs order >= 3");
  Graph g = star_graph(n);
  g.add_edge(1, 2);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs order >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  return Graph(n);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("no part sizes");
  int n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("part sizes must be positive");
    if (i > 0 && parts[i] < parts[i - 1])
      throw std::invalid_argument("part sizes must be nondecreasing");
    n += parts[i];
  }
  Graph g(n);
  // Vertices of part p occupy a contiguous block; edges join distinct blocks.
  int offset_u = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    int offset_v = offset_u + parts[p];
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      for (int u = offset_u; u < offset_u + parts[p]; ++u)
        for (int v = offset_v; v < offset_v + parts[q]; ++v) g.add_edge(u, v);
      offset_v += parts[q];
    }
    offset_u += parts[p];
  }
  return g;
}

Graph build_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path:
      return path_graph(spec.order);
    case Kind::Cycle:
      return cycle_graph(spec.order);
    case Kind::Star:
      return star_graph(spec.order);
    case Kind::StarPlus:
      return star_plus_graph(spec.order);
    case Kind::Complete:
      return complete_graph(spec.order);
    case Kind::Empty:
      return empty_graph(spec.order);
    case Kind::CompleteMultipartite:
      return complete_multipartite(spec.parts);
  }
  throw std::logic_error("unreachable family kind");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng == 0 || nh == 0) throw std::invalid_argument("empty product factor");
  if (ng > kMaxVertices / nh)
    throw std::invalid_argument("product exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  Graph p(ng * nh);
  for (int gv = 0; gv < ng; ++gv)
    for (int hv = 0; hv < nh; ++hv) {
      for (int gw = gv + 1; gw < ng; ++gw)
        if (g.has_edge(gv, gw))
          p.add_edge(product_flatten(gv, hv, nh), product_flatten(gw, hv, nh));
      for (int hw = hv + 1; hw < nh; ++hw)
        if (h.has_edge(hv, hw))
          p.add_edge(product_flatten(gv, hv, nh), product_flatten(gv, hw, nh));
    }
  return p;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::uint64_t> connected_components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  const std::uint64_t all = g.vertex_mask();
  while (seen != all) {
    const int start = std::countr_zero(all & ~seen);
    std::uint64_t comp = bit(start);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask,
                       std::vector<int>* old_ids) {
  std::vector<int> ids;
  for (std::uint64_t m = mask & g.vertex_mask(); m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    ids.push_back(v);
  }
  Graph sub(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.has_edge(ids[i], ids[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  if (old_ids) *old_ids = std::move(ids);
  return sub;
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  return induced_subgraph(g, g.vertex_mask() & ~bit(v));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.has_edge(a, b)) u.add_edge(a, b);
  const int shift = g.order();
  for (int a = 0; a < h.order(); ++a)
    for (int b = a + 1; b < h.order(); ++b)
      if (h.has_edge(a, b)) u.add_edge(shift + a, shift + b);
  return u;
}

}  // namespace ridom
