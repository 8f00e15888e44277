#include "ridom/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ridom {

Graph parse_graph6(std::string_view text) {
  // Strip a trailing newline so whole lines can be fed in directly.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");

  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6 byte outside [63,126]");

  if (text[0] == 126)
    throw std::invalid_argument("graph6 extended sizes (n > 62) not supported");
  const int n = text[0] - 63;

  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6 bit stream has wrong length");

  Graph g(n);
  int row = 0, col = 1;  // column-order walk of the upper triangle
  for (int b = 0; b < nbytes; ++b) {
    const int group = text[static_cast<std::size_t>(1 + b)] - 63;
    for (int s = 5; s >= 0; --s) {
      const bool set = (group >> s) & 1;
      if (col >= n) {
        if (set) throw std::invalid_argument("graph6 padding bits must be zero");
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 output limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph read_edge_list(std::istream& in) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw std::invalid_argument("edge list: missing header");
  std::istringstream head(line);
  int n = 0, m = 0;
  if (!(head >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_line(line))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw std::invalid_argument("edge list: bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

}  // namespace ridom
