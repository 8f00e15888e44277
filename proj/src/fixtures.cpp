#include "ridom/fixtures.hpp"

namespace ridom {

Graph incomparability_graph() {
  Graph g(7);
  for (int top = 0; top <= 2; ++top)
    for (int bottom = 3; bottom <= 6; ++bottom) g.add_edge(top, bottom);
  g.add_edge(0, 1);
  return g;
}

Graph spoke_pairs_graph() {
  Graph g(12);
  for (int pair = 0; pair < 3; ++pair)
    for (int top = 2 * pair; top <= 2 * pair + 1; ++top)
      for (int bottom = 6; bottom < 12; ++bottom) {
        if (bottom == 6 + 2 * pair || bottom == 7 + 2 * pair) continue;
        g.add_edge(top, bottom);
      }
  return g;
}

RikLabeling spoke_pairs_labeling() {
  RikLabeling f;
  f.k = 2;
  f.labels.assign(12, 0);
  f.labels[0] = 1;
  f.labels[1] = 2;
  f.labels[6] = 1;
  f.labels[7] = 2;
  return f;
}

Graph double_spider_graph() {
  Graph g(9);
  for (int v = 1; v <= 4; ++v) {
    g.add_edge(0, v);
    g.add_edge(5, v);
  }
  for (int v = 6; v <= 7; ++v) {
    g.add_edge(8, v);
    g.add_edge(5, v);
  }
  return g;
}

RikLabeling double_spider_labeling() {
  RikLabeling f;
  f.k = 2;
  f.labels.assign(9, 0);
  f.labels[0] = 1;
  f.labels[5] = 2;
  f.labels[8] = 1;
  return f;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(i, i + 5);            // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace ridom
