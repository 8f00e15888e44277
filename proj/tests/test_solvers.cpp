#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>

#include "oracles.hpp"
#include "ridom/fixtures.hpp"
#include "ridom/mis.hpp"
#include "ridom/rainbow.hpp"
#include "ridom/solver.hpp"

using namespace ridom;

namespace {

int value_of(const Graph& g, int k) {
  SolveOptions opts;
  opts.want_witness = false;
  return solve_rik(g, k, opts).value;
}

}  // namespace

TEST_CASE("known closed-form instances") {
  CHECK(value_of(path_graph(5), 2) == 3);
  CHECK(value_of(cycle_graph(5), 2) == 4);
  CHECK(value_of(complete_graph(4), 2) == 2);
  CHECK(value_of(star_graph(7), 3) == 6);
  CHECK(value_of(empty_graph(3), 2) == 3);  // max degree below k
  CHECK(value_of(complete_graph(3), 3) == 3);
}

TEST_CASE("solver agrees with the exhaustive labeling oracle") {
  const std::vector<Graph> corpus = {
      path_graph(6),      cycle_graph(6),     cycle_graph(7),
      star_graph(6),      star_plus_graph(6), complete_graph(5),
      complete_multipartite({2, 2, 3}),       empty_graph(4),
      petersen_graph(),   incomparability_graph(),
      disjoint_union(path_graph(3), cycle_graph(4)),
  };
  for (const auto& g : corpus)
    for (int k = 1; k <= 3; ++k) {
      if (g.order() > 8 && k > 2) continue;  // keep the oracle cheap
      CAPTURE(g.order());
      CAPTURE(k);
      CHECK(value_of(g, k) == testoracle::rik_bruteforce(g, k));
    }
}

TEST_CASE("solver agrees with the product oracle on the Petersen graph") {
  const Graph pg = petersen_graph();
  const int via_product = oracle_rik_via_product(pg, 2);
  CHECK(value_of(pg, 2) == via_product);
  CHECK(via_product == 6);  // frozen from the product enumeration
}

TEST_CASE("witnesses verify, match the value, and are lexicographically first") {
  const std::vector<Graph> corpus = {path_graph(5), cycle_graph(6),
                                     star_graph(5), complete_graph(4),
                                     spoke_pairs_graph()};
  for (const auto& g : corpus)
    for (int k = 1; k <= 3; ++k) {
      const SolveResult res = solve_rik(g, k);
      REQUIRE(res.witness.has_value());
      CHECK(verify_rik(g, *res.witness));
      CHECK(res.witness->weight() == res.value);
    }

  // Lexicographic tie-breaking, small enough to confirm by enumeration.
  const Graph c4 = cycle_graph(4);
  const SolveResult res = solve_rik(c4, 2);
  auto optima = enumerate_optimal_rik(c4, 2, 1000);
  REQUIRE(!optima.empty());
  auto lex_least = std::min_element(
      optima.begin(), optima.end(),
      [](const RikLabeling& a, const RikLabeling& b) {
        return a.labels < b.labels;
      });
  CHECK(res.witness->labels == lex_least->labels);
}

TEST_CASE("disconnected graphs solve as component sums") {
  const Graph g = disjoint_union(disjoint_union(complete_graph(2),
                                                complete_graph(1)),
                                 cycle_graph(5));
  CHECK(value_of(g, 2) == 2 + 1 + 4);
  const SolveResult res = solve_rik(g, 2);
  CHECK(verify_rik(g, *res.witness));
}

TEST_CASE("independent domination and independence numbers") {
  CHECK(independent_domination_number(cycle_graph(5)).value == 2);
  CHECK(independent_domination_number(complete_graph(6)).value == 1);
  CHECK(independent_domination_number(complete_multipartite({2, 3})).value ==
        2);

  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(empty_graph(6)) == 6);
  CHECK(independence_number(complete_multipartite({2, 3})) == 3);

  const std::vector<Graph> corpus = {path_graph(7), cycle_graph(8),
                                     star_plus_graph(6), petersen_graph(),
                                     empty_graph(3)};
  for (const auto& g : corpus) {
    CHECK(independent_domination_number(g).value ==
          testoracle::i_bruteforce(g));
    CHECK(independence_number(g) == testoracle::alpha_bruteforce(g));
    const auto r = independent_domination_number(g);
    CHECK(verify_rik(g, r.witness));
    CHECK(r.witness.weight() == r.value);
  }
}

TEST_CASE("domination number against subset brute force") {
  CHECK(domination_number(path_graph(6)) == 2);
  CHECK(domination_number(complete_graph(9)) == 1);
  CHECK(domination_number(cycle_graph(5)) == 2);
  for (const Graph& g : {path_graph(8), cycle_graph(7), star_graph(6),
                         petersen_graph(), empty_graph(4)})
    CHECK(domination_number(g) == testoracle::gamma_bruteforce(g));
}

TEST_CASE("maximal independent set enumeration") {
  // C_5 has exactly five maximal independent sets, all of size 2.
  const MisSummary s = scan_maximal_independent_sets(cycle_graph(5));
  CHECK(s.count == 5);
  CHECK(s.min_maximal == 2);
  CHECK(s.max_size == 2);

  // K_n: n singletons.
  CHECK(scan_maximal_independent_sets(complete_graph(4)).count == 4);

  // Empty graph: single maximal set (everything).
  const MisSummary e = scan_maximal_independent_sets(empty_graph(5));
  CHECK(e.count == 1);
  CHECK(e.min_maximal == 5);
}

TEST_CASE("product oracle") {
  CHECK(oracle_rik_via_product(path_graph(5), 2) == 3);
  CHECK(oracle_rik_via_product(complete_graph(3), 3) == 3);
  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(5),
                         complete_multipartite({2, 2})})
    CHECK(oracle_rik_via_product(g, 1) ==
          independent_domination_number(g).value);

  CHECK_THROWS_AS(oracle_rik_via_product(complete_graph(21), 2),
                  GuardExceeded);
  CHECK(oracle_rik_via_product(complete_graph(21), 2, 42) == 2);
}

TEST_CASE("rainbow domination solver") {
  CHECK(rainbow_domination_number(path_graph(5), 2, false).value == 3);
  CHECK(rainbow_domination_number(complete_graph(1), 3, false).value == 1);
  CHECK(rainbow_domination_number(cycle_graph(5), 2, false).value == 3);

  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(5),
                         complete_graph(4), empty_graph(3)})
    for (int k = 1; k <= 3; ++k) {
      const RainbowResult res = rainbow_domination_number(g, k);
      CHECK(res.value == testoracle::rk_bruteforce(g, k, false));
      REQUIRE(res.witness.has_value());
      CHECK(verify_rk(g, *res.witness));
      CHECK(res.witness->weight() == res.value);
    }
}

TEST_CASE("independent rainbow domination solver") {
  CHECK(independent_rainbow_domination_number(star_graph(7), 3, false).value ==
        3);
  CHECK(independent_rainbow_domination_number(incomparability_graph(), 3,
                                              false)
            .value == 4);
  CHECK(independent_rainbow_domination_number(complete_graph(5), 2, false)
            .value == 2);

  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(5),
                         complete_graph(4), empty_graph(3)})
    for (int k = 1; k <= 3; ++k) {
      const RainbowResult res = independent_rainbow_domination_number(g, k);
      CHECK(res.value == testoracle::rk_bruteforce(g, k, true));
      REQUIRE(res.witness.has_value());
      CHECK(verify_irk(g, *res.witness));
      CHECK(res.witness->weight() == res.value);
    }
}

TEST_CASE("the two variants are incomparable") {
  CHECK(value_of(star_graph(7), 3) == 6);
  CHECK(independent_rainbow_domination_number(star_graph(7), 3, false).value ==
        3);
  CHECK(value_of(incomparability_graph(), 3) == 3);
  CHECK(independent_rainbow_domination_number(incomparability_graph(), 3,
                                              false)
            .value == 4);
}

TEST_CASE("optimum enumeration") {
  // K_2 at k=2: both vertices labeled, distinct colors.
  auto optima = enumerate_optimal_rik(complete_graph(2), 2, 100);
  REQUIRE(optima.size() == 2);
  CHECK(optima[0].labels == std::vector<std::uint8_t>{1, 2});
  CHECK(optima[1].labels == std::vector<std::uint8_t>{2, 1});

  // P_3: every optimum has weight 2.
  for (const auto& f : enumerate_optimal_rik(path_graph(3), 2, 100))
    CHECK(f.weight() == 2);

  // C_4: every optimum is an antipodal labeled pair.
  for (const auto& f : enumerate_optimal_rik(cycle_graph(4), 2, 100)) {
    CHECK(f.weight() == 2);
    std::vector<int> labeled;
    for (int v = 0; v < 4; ++v)
      if (f.labels[static_cast<std::size_t>(v)]) labeled.push_back(v);
    REQUIRE(labeled.size() == 2);
    CHECK((labeled[1] - labeled[0]) == 2);
  }

  // The cap limits output.
  CHECK(enumerate_optimal_rik(cycle_graph(4), 2, 1).size() == 1);

  CHECK_THROWS_AS(enumerate_optimal_rik(complete_graph(13), 2, 10),
                  GuardExceeded);
  CHECK_THROWS_AS(enumerate_optimal_rik(complete_graph(3), 2, 0),
                  std::invalid_argument);
}

TEST_CASE("witness labelings translate to product independent dominating sets") {
  // f's color classes map to product vertices (g,c) under the row-major
  // flattening; the image must independently dominate G x K_k with size
  // equal to the solved value.
  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(5),
                         complete_multipartite({2, 3})})
    for (int k = 1; k <= 3; ++k) {
      const SolveResult res = solve_rik(g, k);
      REQUIRE(res.witness.has_value());
      const Graph prod = cartesian_product(g, complete_graph(k));
      std::uint64_t image = 0;
      for (int v = 0; v < g.order(); ++v) {
        const int c = res.witness->labels[static_cast<std::size_t>(v)];
        if (c > 0) image |= bit(product_flatten(v, c - 1, k));
      }
      CHECK(std::popcount(image) == res.value);
      CHECK(testoracle::subset_independent(prod, image));
      CHECK(testoracle::subset_dominating(prod, image));
    }
}

TEST_CASE("shortcut paths still produce valid witnesses") {
  // max degree below k forces everything labeled
  const SolveResult res = solve_rik(path_graph(4), 3);
  CHECK(res.value == 4);
  CHECK(verify_rik(path_graph(4), *res.witness));

  // tiny orders
  CHECK(solve_rik(complete_graph(2), 5).value == 2);
  CHECK(solve_rik(Graph(0), 2).value == 0);
}

TEST_CASE("solver matches the product oracle on random larger graphs") {
  std::uint64_t state = 0xfeedface;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + static_cast<int>(next() % 6);  // 8..13
    Graph g(n);
    const int density = 2 + static_cast<int>(next() % 7);  // edge prob d/10
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (next() % 10 < static_cast<std::uint64_t>(density))
          g.add_edge(u, v);
    for (int k = 2; k <= 3; ++k) {
      if (n * k > 40) continue;
      CAPTURE(trial);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(value_of(g, k) == oracle_rik_via_product(g, k));
    }
  }
  // structured shapes at the guard boundary
  CHECK(value_of(cycle_graph(13), 3) == oracle_rik_via_product(cycle_graph(13), 3));
  CHECK(value_of(path_graph(20), 2) ==
        oracle_rik_via_product(path_graph(20), 2, 40));
}

TEST_CASE("search statistics are populated") {
  const SolveResult res = solve_rik(cycle_graph(6), 2);
  CHECK(res.stats.root_lower >= 2);
  CHECK(res.stats.root_upper >= res.value);
  CHECK(res.stats.nodes > 0);
}
