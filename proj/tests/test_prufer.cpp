#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ridom/prufer.hpp"

using namespace ridom;

TEST_CASE("tree counts follow the Cayley formula") {
  CHECK(labeled_tree_count(2) == 1);
  CHECK(labeled_tree_count(3) == 3);
  CHECK(labeled_tree_count(4) == 16);
  CHECK(labeled_tree_count(9) == 4782969);

  int count = 0;
  enumerate_trees(3, [&count](const Graph& t) {
    ++count;
    CHECK(t.degree_sequence() == std::vector<int>{2, 1, 1});
  });
  CHECK(count == 3);

  count = 0;
  enumerate_trees(4, [&count](const Graph&) { ++count; });
  CHECK(count == 16);
}

TEST_CASE("n = 2 decodes to a single edge") {
  const Graph t = prufer_decode(TreeCode{}, 2);
  CHECK(t.order() == 2);
  CHECK(t.has_edge(0, 1));
}

TEST_CASE("every decode is a tree and encode inverts it") {
  for (int n = 2; n <= 7; ++n) {
    const std::uint64_t count = labeled_tree_count(n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const TreeCode code = prufer_unrank(n, idx);
      const Graph t = prufer_decode(code, n);
      CHECK(t.edge_count() == n - 1);
      CHECK(is_tree(t));
      CHECK(prufer_encode(t).seq == code.seq);
    }
  }
}

TEST_CASE("decode validates input") {
  CHECK_THROWS_AS(prufer_decode(TreeCode{{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(prufer_decode(TreeCode{{5}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(prufer_encode(cycle_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(13, [](const Graph&) {}),
                  std::invalid_argument);
}

TEST_CASE("distinct codes give distinct labeled trees at n = 4") {
  std::vector<std::vector<std::uint64_t>> seen;
  enumerate_trees(4, [&seen](const Graph& t) {
    std::vector<std::uint64_t> rows;
    for (int v = 0; v < t.order(); ++v) rows.push_back(t.neighbors(v));
    for (const auto& other : seen) CHECK(other != rows);
    seen.push_back(rows);
  });
  CHECK(seen.size() == 16);
}
