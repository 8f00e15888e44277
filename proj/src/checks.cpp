#include "ridom/checks.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "ridom/graph6.hpp"
#include "ridom/mis.hpp"
#include "ridom/prufer.hpp"
#include "ridom/rainbow.hpp"

namespace ridom {

namespace {

int solve_value(const Graph& g, int k) {
  SolveOptions opts;
  opts.want_witness = false;
  return solve_rik(g, k, opts).value;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

ScanReport run_scan(const Corpus& corpus, const std::string& check,
                    const std::function<GraphVerdict(const Graph&)>& eval,
                    const ScanSettings& settings) {
  ScanReport report;
  report.corpus = corpus.descriptor();
  report.check = check;
  const auto t0 = std::chrono::steady_clock::now();

  auto consume = [&](std::uint64_t idx, const GraphVerdict& v) {
    ++report.graphs;
    if (!v.ok) {
      ++report.violations;
      if (report.counterexamples.size() < kReportListCap)
        report.counterexamples.push_back(emit_graph6(corpus.graph(idx)));
    }
    if (v.flag_lower) {
      ++report.lower_attainer_count;
      if (report.lower_attainers.size() < kReportListCap)
        report.lower_attainers.push_back(emit_graph6(corpus.graph(idx)));
    }
    if (v.flag_upper) {
      ++report.upper_attainer_count;
      if (report.upper_attainers.size() < kReportListCap)
        report.upper_attainers.push_back(emit_graph6(corpus.graph(idx)));
    }
    if (settings.record_sink) settings.record_sink(idx, corpus.graph(idx), v);
  };

  scan_corpus(corpus, eval, consume, settings.exec);
  report.millis = elapsed_ms(t0);
  return report;
}

// Merge b into a (multi-corpus scans).
void merge_into(ScanReport& a, const ScanReport& b) {
  a.corpus += a.corpus.empty() ? b.corpus : "+" + b.corpus;
  a.graphs += b.graphs;
  a.violations += b.violations;
  a.lower_attainer_count += b.lower_attainer_count;
  a.upper_attainer_count += b.upper_attainer_count;
  auto append_capped = [](std::vector<std::string>& dst,
                          const std::vector<std::string>& src) {
    for (const auto& s : src) {
      if (dst.size() >= kReportListCap) break;
      dst.push_back(s);
    }
  };
  append_capped(a.counterexamples, b.counterexamples);
  append_capped(a.lower_attainers, b.lower_attainers);
  append_capped(a.upper_attainers, b.upper_attainers);
  a.millis += b.millis;
}

}  // namespace

// ---------------------------------------------------------------------------
// Per-graph checks.

NgVerdict check_nordhaus_gaddum(const Graph& g) {
  if (g.order() < 3)
    throw std::invalid_argument("Nordhaus-Gaddum check needs n >= 3");
  NgVerdict v;
  v.value = solve_value(g, 2);
  v.complement_value = solve_value(complement(g), 2);
  v.sum = v.value + v.complement_value;
  v.within_bounds = v.sum >= 5 && v.sum <= g.order() + 3;
  v.attains_lower = v.sum == 5;
  v.attains_upper = v.sum == g.order() + 3;
  return v;
}

bool check_tree_theorem(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2)
    throw std::invalid_argument("needs a tree of order >= 2");
  return independent_domination_number(tree).value < solve_value(tree, 2);
}

bool check_leaf_lemmas(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2)
    throw std::invalid_argument("needs a tree of order >= 2");
  const int i_t = independent_domination_number(tree).value;
  const int r_t = solve_value(tree, 2);
  for (int x = 0; x < tree.order(); ++x) {
    if (tree.degree(x) != 1) continue;
    const Graph trimmed = remove_vertex(tree, x);
    const int di = i_t - independent_domination_number(trimmed).value;
    const int dr = r_t - solve_value(trimmed, 2);
    if (di != 0 && di != 1) return false;
    if (dr != 0 && dr != 1) return false;
  }
  return true;
}

bool check_leaf_observation(const Graph& g) {
  if (g.order() == 0) return true;
  if (g.min_degree() == 0)
    throw std::invalid_argument("isolated vertex present");
  std::uint64_t leaves = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) leaves |= bit(v);
  if (!leaves) return true;

  bool ok = true;
  for_each_optimal_rik(g, 2, [&](const RikLabeling& f) {
    for (std::uint64_t m = leaves; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (f.labels[static_cast<std::size_t>(v)] == 0) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

bool check_components_lemma(const Graph& g) {
  const int n = g.order();
  const int value = solve_value(g, 2);
  bool tiny_components = true;
  for (const auto comp : connected_components(g))
    if (std::popcount(comp) > 2) tiny_components = false;
  if ((value == n) != tiny_components) return false;
  if (value == n && n >= 2 && solve_value(complement(g), 2) != 2) return false;
  return true;
}

namespace {

// S_n or S_n^+ up to isomorphism: a vertex adjacent to all others whose
// remaining graph has zero edges or exactly one.
bool star_or_star_plus(const Graph& g) {
  const int n = g.order();
  int universal = -1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) {
      universal = v;
      break;
    }
  if (universal < 0) return false;
  int ones = 0, twos = 0;
  std::uint64_t deg2 = 0;
  for (int v = 0; v < n; ++v) {
    if (v == universal) continue;
    const int d = g.degree(v);
    if (d == 1) {
      ++ones;
    } else if (d == 2) {
      ++twos;
      deg2 |= bit(v);
    } else {
      return false;
    }
  }
  if (twos == 0) return true;  // plain star
  if (twos != 2) return false;
  // The extra edge must join the two degree-2 outer vertices.
  const int a = std::countr_zero(deg2);
  const int b = std::countr_zero(deg2 & (deg2 - 1));
  return g.has_edge(a, b);
}

}  // namespace

bool check_star_lemma(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("star lemma check needs n >= 3");
  bool universal = false;
  for (int v = 0; v < n && !universal; ++v)
    if (g.degree(v) == n - 1) universal = true;
  if (!universal) return true;
  if (solve_value(g, 2) != n - 1) return true;
  return star_or_star_plus(g);
}

bool check_corollary_independence(const Graph& g, int k) {
  const int i_g = independent_domination_number(g).value;
  SolveOptions opts;
  opts.want_witness = false;
  if (solve_rik(g, k, opts).value != i_g) return true;  // vacuous

  bool ok = true;
  for_each_optimal_rik(g, k, [&](const RikLabeling& f) {
    std::uint64_t labeled = 0;
    for (std::size_t v = 0; v < f.labels.size(); ++v)
      if (f.labels[v]) labeled |= bit(static_cast<int>(v));
    for (std::uint64_t m = labeled; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (g.neighbors(v) & labeled) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Scans.

FamilyScanReport check_family_formulas(int max_n) {
  if (max_n < 5) throw std::invalid_argument("family scan needs max_n >= 5");
  const auto t0 = std::chrono::steady_clock::now();
  FamilyScanReport report;

  auto expect = [&report](const std::string& family, int n, const Graph& g,
                          int expected) {
    ++report.instances;
    const int actual = solve_value(g, 2);
    if (actual != expected)
      report.mismatches.push_back({family, n, expected, actual});
  };

  for (int n = 2; n <= max_n; ++n)
    expect("path", n, path_graph(n), (n + 2) / 2);  // ceil((n+1)/2)
  for (int n = 3; n <= max_n; ++n) {
    const int base = (n + 1) / 2;  // ceil(n/2)
    const int extra = (n % 4 == 1 || n % 4 == 2) ? 1 : 0;
    expect("cycle", n, cycle_graph(n), base + extra);
  }
  for (int n = 3; n <= max_n; ++n) expect("star", n, star_graph(n), n - 1);
  for (int n = 3; n <= max_n; ++n)
    expect("star-plus", n, star_plus_graph(n), n - 1);
  for (int n = 2; n <= max_n; ++n) expect("complete", n, complete_graph(n), 2);

  // Complete multipartite: every nondecreasing part vector with at least two
  // parts, smallest part >= 2, total <= min(max_n, 10). The value and the
  // independent domination number both equal the smallest part.
  const int total_cap = std::min(max_n, 10);
  std::vector<int> parts;
  auto emit = [&](const std::vector<int>& ps) {
    const Graph g = complete_multipartite(ps);
    std::string name = "kmulti:";
    for (std::size_t i = 0; i < ps.size(); ++i)
      name += (i ? "," : "") + std::to_string(ps[i]);
    expect(name, g.order(), g, ps[0]);
    ++report.instances;
    const int i_value = independent_domination_number(g).value;
    if (i_value != ps[0])
      report.mismatches.push_back({name + ":i", g.order(), ps[0], i_value});
  };
  std::function<void(int, int)> grow = [&](int remaining, int min_part) {
    if (parts.size() >= 2) emit(parts);
    for (int next = min_part; next <= remaining; ++next) {
      parts.push_back(next);
      grow(remaining - next, next);
      parts.pop_back();
    }
  };
  grow(total_cap, 2);

  report.millis = elapsed_ms(t0);
  return report;
}

namespace {

GraphVerdict ng_verdict_of(const Graph& g) {
  const NgVerdict v = check_nordhaus_gaddum(g);
  GraphVerdict out;
  out.values[0] = v.value;
  out.values[1] = v.complement_value;
  out.values[2] = v.sum;
  out.flag_lower = v.attains_lower;
  out.flag_upper = v.attains_upper;
  out.ok = v.within_bounds && (g.order() == 3 || !v.attains_lower);
  return out;
}

}  // namespace

ScanReport scan_nordhaus_gaddum(int n, const ScanSettings& settings) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("Nordhaus-Gaddum scan supports 3 <= n <= 8");
  if (settings.corpus)
    return run_scan(*settings.corpus, "nordhaus-gaddum", ng_verdict_of,
                    settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, "nordhaus-gaddum", ng_verdict_of, settings);
}

ScanReport find_extremal(int n, NgBound target, const ScanSettings& settings) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("extremal search supports 3 <= n <= 8");
  auto eval = [](const Graph& g) {
    GraphVerdict out = ng_verdict_of(g);
    out.ok = out.values[2] >= 5 && out.values[2] <= g.order() + 3;
    return out;
  };
  const std::string check =
      target == NgBound::Lower ? "extremal-lower" : "extremal-upper";
  if (settings.corpus) return run_scan(*settings.corpus, check, eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, check, eval, settings);
}

ScanReport scan_wu_xing(int n, const ScanSettings& settings) {
  if (n < 3) throw std::invalid_argument("comparator scan needs n >= 3");
  auto eval = [](const Graph& g) {
    GraphVerdict out;
    out.values[0] = rainbow_domination_number(g, 2, false).value;
    out.values[1] =
        rainbow_domination_number(complement(g), 2, false).value;
    out.values[2] = out.values[0] + out.values[1];
    out.flag_lower = out.values[2] == 5;
    out.flag_upper = out.values[2] == g.order() + 2;
    out.ok = out.values[2] >= 5 && out.values[2] <= g.order() + 2;
    return out;
  };
  if (settings.corpus)
    return run_scan(*settings.corpus, "wu-xing", eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, "wu-xing", eval, settings);
}

namespace {

GraphVerdict tree_verdict_of(const Graph& t) {
  GraphVerdict out;
  const int i_t = independent_domination_number(t).value;
  const int r_t = solve_value(t, 2);
  out.values[0] = i_t;
  out.values[1] = r_t;
  out.ok = i_t < r_t;
  for (int x = 0; x < t.order() && out.ok; ++x) {
    if (t.degree(x) != 1) continue;
    const Graph trimmed = remove_vertex(t, x);
    const int di = i_t - independent_domination_number(trimmed).value;
    const int dr = r_t - solve_value(trimmed, 2);
    out.ok = (di == 0 || di == 1) && (dr == 0 || dr == 1);
  }
  return out;
}

}  // namespace

ScanReport scan_trees(const TreeScanPlan& plan, const ScanSettings& settings) {
  if (plan.max_n < 2) throw std::invalid_argument("tree scan needs max_n >= 2");
  ScanReport total;
  total.check = "trees";

  const int full_max = std::min(plan.max_n, 9);
  for (int n = 2; n <= full_max; ++n) {
    const LabeledTreeCorpus corpus(n);
    merge_into(total, run_scan(corpus, "trees", tree_verdict_of, settings));
  }
  std::string descriptor =
      "labeled-trees:n=2.." + std::to_string(full_max);
  if (plan.max_n > 9 && plan.samples > 0) {
    const int orders = plan.max_n - 9;
    const std::uint64_t each = plan.samples / static_cast<std::uint64_t>(orders);
    std::uint64_t leftover = plan.samples % static_cast<std::uint64_t>(orders);
    for (int n = 10; n <= plan.max_n; ++n) {
      std::uint64_t quota = each + (leftover > 0 ? 1 : 0);
      if (leftover > 0) --leftover;
      if (quota == 0) continue;
      const SampledTreeCorpus corpus(n, quota, plan.seed);
      merge_into(total, run_scan(corpus, "trees", tree_verdict_of, settings));
    }
    descriptor += "+sampled-trees:n=10.." + std::to_string(plan.max_n) +
                  ",samples=" + std::to_string(plan.samples) +
                  ",seed=" + std::to_string(plan.seed);
  }
  total.corpus = descriptor;
  return total;
}

ScanReport scan_lemmas(int n, const ScanSettings& settings) {
  if (n < 1) throw std::invalid_argument("lemma scan needs n >= 1");
  auto eval = [](const Graph& g) {
    GraphVerdict out;
    out.ok = check_components_lemma(g);
    if (out.ok && g.order() >= 3) out.ok = check_star_lemma(g);
    if (out.ok && g.order() >= 1 && g.min_degree() >= 1)
      out.ok = check_leaf_observation(g);
    return out;
  };
  if (settings.corpus)
    return run_scan(*settings.corpus, "lemmas", eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, "lemmas", eval, settings);
}

ScanReport scan_corollary(int n, int k, const ScanSettings& settings) {
  auto eval = [k](const Graph& g) {
    GraphVerdict out;
    out.ok = check_corollary_independence(g, k);
    return out;
  };
  const std::string check = "corollary:k=" + std::to_string(k);
  if (settings.corpus) return run_scan(*settings.corpus, check, eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, check, eval, settings);
}

ScanReport scan_oracle_equivalence(int n, int k, const ScanSettings& settings) {
  auto eval = [k](const Graph& g) {
    GraphVerdict out;
    out.values[0] = solve_value(g, k);
    out.values[1] = oracle_rik_via_product(g, k);
    out.ok = out.values[0] == out.values[1];
    return out;
  };
  const std::string check = "oracle:k=" + std::to_string(k);
  if (settings.corpus) return run_scan(*settings.corpus, check, eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, check, eval, settings);
}

ScanReport scan_characterization(int n, int k, const ScanSettings& settings) {
  auto eval = [k](const Graph& g) {
    GraphVerdict out;
    if (g.order() < k || !is_connected(g)) return out;  // vacuous
    const bool structural = check_value_k_characterization(g, k);
    const bool exact = solve_value(g, k) == k;
    out.values[0] = structural;
    out.values[1] = exact;
    out.ok = structural == exact;
    return out;
  };
  const std::string check = "characterization:k=" + std::to_string(k);
  if (settings.corpus) return run_scan(*settings.corpus, check, eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, check, eval, settings);
}

ScanReport scan_invariant_properties(int n, int k,
                                     const ScanSettings& settings) {
  auto eval = [k](const Graph& g) {
    GraphVerdict out;
    const SolveResult res = solve_rik(g, k);
    const int value = res.value;
    const int order = g.order();
    out.values[0] = value;

    bool ok = res.witness.has_value() && verify_rik(g, *res.witness) &&
              res.witness->weight() == value;
    ok = ok && value >= std::min(order, k) && value <= order;
    if (g.max_degree() < k) ok = ok && value == order;

    const int i_g = independent_domination_number(g).value;
    const int alpha = independence_number(g);
    out.values[1] = i_g;
    if (k == 1) ok = ok && value == i_g;
    ok = ok && i_g <= value && value <= k * alpha;

    const RainbowResult rk = rainbow_domination_number(g, k);
    ok = ok && rk.witness.has_value() && verify_rk(g, *rk.witness) &&
         rk.witness->weight() == rk.value;
    out.values[2] = rk.value;
    if (order >= 1) {
      const Graph prod = cartesian_product(g, complete_graph(k));
      const int alpha_prod = independence_number(prod);
      ok = ok && rk.value <= value && value <= alpha_prod;
    }

    const RainbowResult irk = independent_rainbow_domination_number(g, k);
    ok = ok && irk.witness.has_value() && verify_irk(g, *irk.witness) &&
         irk.witness->weight() == irk.value;
    out.values[3] = irk.value;

    const auto comps = connected_components(g);
    if (comps.size() > 1) {
      int sum = 0;
      for (const auto mask : comps)
        sum += solve_value(induced_subgraph(g, mask), k);
      ok = ok && sum == value;
    }

    out.ok = ok;
    return out;
  };
  const std::string check = "properties:k=" + std::to_string(k);
  if (settings.corpus) return run_scan(*settings.corpus, check, eval, settings);
  const LabeledGraphCorpus corpus(n);
  return run_scan(corpus, check, eval, settings);
}

}  // namespace ridom
