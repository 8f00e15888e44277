#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ridom/checks.hpp"
#include "ridom/fixtures.hpp"
#include "ridom/graph6.hpp"
#include "ridom/mis.hpp"
#include "ridom/solver.hpp"

using namespace ridom;

TEST_CASE("Nordhaus-Gaddum verdicts on named instances") {
  const NgVerdict c5 = check_nordhaus_gaddum(cycle_graph(5));
  CHECK(c5.sum == 8);  // n + 3
  CHECK(c5.attains_upper);
  CHECK(c5.within_bounds);

  const NgVerdict k4 = check_nordhaus_gaddum(complete_graph(4));
  CHECK(k4.value == 2);
  CHECK(k4.complement_value == 4);
  CHECK(k4.sum == 6);
  CHECK(k4.within_bounds);

  // every order-3 graph sums to exactly 5
  const LabeledGraphCorpus order3(3);
  for (std::uint64_t idx = 0; idx < order3.size(); ++idx)
    CHECK(check_nordhaus_gaddum(order3.graph(idx)).sum == 5);

  CHECK_THROWS_AS(check_nordhaus_gaddum(complete_graph(2)),
                  std::invalid_argument);
}

TEST_CASE("tree theorem on named trees") {
  CHECK(check_tree_theorem(path_graph(2)));
  CHECK(check_tree_theorem(star_graph(7)));
  // a 10-vertex caterpillar
  const Graph t = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7},
           {4, 8}, {8, 9}});
  CHECK(check_tree_theorem(t));
  CHECK_THROWS_AS(check_tree_theorem(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("leaf lemmas on named trees") {
  CHECK(check_leaf_lemmas(path_graph(4)));
  CHECK(check_leaf_lemmas(star_graph(5)));
  CHECK(check_leaf_lemmas(path_graph(2)));

  // spot-check the deltas the lemma allows
  const int i4 = independent_domination_number(path_graph(4)).value;
  const int i3 = independent_domination_number(path_graph(3)).value;
  CHECK(i4 == 2);
  CHECK(i3 == 1);

  SolveOptions quiet;
  quiet.want_witness = false;
  CHECK(solve_rik(star_graph(5), 2, quiet).value == 4);
  CHECK(solve_rik(star_graph(4), 2, quiet).value == 3);
}

TEST_CASE("leaf observation") {
  CHECK(check_leaf_observation(path_graph(3)));
  CHECK(check_leaf_observation(star_graph(4)));
  CHECK(check_leaf_observation(complete_graph(2)));
  CHECK(check_leaf_observation(cycle_graph(5)));  // no leaves: vacuous
  CHECK_THROWS_AS(check_leaf_observation(empty_graph(2)),
                  std::invalid_argument);
}

TEST_CASE("components lemma") {
  CHECK(check_components_lemma(disjoint_union(complete_graph(2),
                                              complete_graph(1))));
  CHECK(check_components_lemma(path_graph(3)));
  CHECK(check_components_lemma(empty_graph(4)));
  CHECK(check_components_lemma(complete_graph(1)));

  SolveOptions quiet;
  quiet.want_witness = false;
  const Graph k2k1 = disjoint_union(complete_graph(2), complete_graph(1));
  CHECK(solve_rik(k2k1, 2, quiet).value == 3);
  CHECK(solve_rik(complement(k2k1), 2, quiet).value == 2);
}

TEST_CASE("star lemma") {
  CHECK(check_star_lemma(star_graph(5)));
  CHECK(check_star_lemma(star_plus_graph(5)));
  CHECK(check_star_lemma(complete_graph(4)));  // value 2, premise vacuous
  CHECK(check_star_lemma(cycle_graph(5)));     // no universal vertex
  CHECK_THROWS_AS(check_star_lemma(complete_graph(2)), std::invalid_argument);
}

TEST_CASE("corollary on independent labeled unions") {
  CHECK(check_corollary_independence(complete_multipartite({2, 3}), 2));
  CHECK(check_corollary_independence(spoke_pairs_graph(), 2));
  CHECK(check_corollary_independence(path_graph(4), 2));  // i < value: vacuous
}

TEST_CASE("figure fixtures satisfy the lower-bound equality") {
  SolveOptions quiet;
  quiet.want_witness = false;
  for (const Graph& g : {spoke_pairs_graph(), double_spider_graph()}) {
    const int i_g = independent_domination_number(g).value;
    CHECK(i_g == solve_rik(g, 2, quiet).value);
  }
}

TEST_CASE("family formula scan is clean") {
  const FamilyScanReport report = check_family_formulas(12);
  CHECK(report.clean());
  CHECK(report.instances > 40);
  CHECK_THROWS_AS(check_family_formulas(4), std::invalid_argument);
}

TEST_CASE("Nordhaus-Gaddum scan at small orders") {
  ScanSettings settings;
  const ScanReport n3 = scan_nordhaus_gaddum(3, settings);
  CHECK(n3.clean());
  CHECK(n3.graphs == 8);
  CHECK(n3.lower_attainer_count == 8);  // every order-3 graph

  const ScanReport n4 = scan_nordhaus_gaddum(4, settings);
  CHECK(n4.clean());
  CHECK(n4.graphs == 64);
  CHECK(n4.lower_attainer_count == 0);

  const ScanReport n5 = scan_nordhaus_gaddum(5, settings);
  CHECK(n5.clean());
  CHECK(n5.lower_attainer_count == 0);
  // the canonical labeled 5-cycle appears among the upper attainers
  const std::string c5 = emit_graph6(cycle_graph(5));
  bool found = false;
  for (const auto& g6 : n5.upper_attainers) found |= g6 == c5;
  CHECK(found);

  CHECK_THROWS_AS(scan_nordhaus_gaddum(2, settings), std::invalid_argument);
}

TEST_CASE("extremal search") {
  ScanSettings settings;
  const ScanReport lower3 = find_extremal(3, NgBound::Lower, settings);
  CHECK(lower3.lower_attainer_count == 8);

  const ScanReport lower6 = find_extremal(6, NgBound::Lower, settings);
  CHECK(lower6.lower_attainer_count == 0);

  const ScanReport upper5 = find_extremal(5, NgBound::Upper, settings);
  CHECK(upper5.upper_attainer_count > 0);
}

TEST_CASE("comparator scan stays within its published bounds") {
  ScanSettings settings;
  for (int n = 3; n <= 5; ++n) CHECK(scan_wu_xing(n, settings).clean());
}

TEST_CASE("tree scans are clean at small orders") {
  TreeScanPlan plan;
  plan.max_n = 6;
  const ScanReport report = scan_trees(plan, {});
  CHECK(report.clean());
  CHECK(report.graphs == 1 + 3 + 16 + 125 + 1296);
}

TEST_CASE("sampled tree corpus is deterministic") {
  const SampledTreeCorpus a(10, 5, 77);
  const SampledTreeCorpus b(10, 5, 77);
  for (std::uint64_t i = 0; i < 5; ++i) {
    CHECK(a.graph(i) == b.graph(i));
    CHECK(is_tree(a.graph(i)));
  }
  const SampledTreeCorpus c(10, 5, 78);
  bool any_different = false;
  for (std::uint64_t i = 0; i < 5; ++i)
    any_different |= !(a.graph(i) == c.graph(i));
  CHECK(any_different);
}

TEST_CASE("lemma and corollary scans over whole orders") {
  CHECK(scan_lemmas(4, {}).clean());
  CHECK(scan_corollary(4, 2, {}).clean());
}

TEST_CASE("oracle equivalence and characterization scans") {
  for (int k = 1; k <= 3; ++k) {
    const ScanReport r = scan_oracle_equivalence(4, k, {});
    CHECK(r.clean());
    CHECK(r.graphs == 64);
  }
  CHECK(scan_oracle_equivalence(5, 3, {}).clean());
  for (int k = 2; k <= 3; ++k) CHECK(scan_characterization(4, k, {}).clean());
}

TEST_CASE("built-in enumeration stops at order 7") {
  CHECK_THROWS_AS(scan_nordhaus_gaddum(8, {}), std::invalid_argument);
  // ...but a supplied corpus lifts the limit
  const FileCorpus corpus("inline", {path_graph(8)});
  ScanSettings settings;
  settings.corpus = &corpus;
  CHECK(scan_nordhaus_gaddum(8, settings).clean());
}

TEST_CASE("invariant property scan") {
  for (int k = 1; k <= 3; ++k) CHECK(scan_invariant_properties(4, k, {}).clean());
}
