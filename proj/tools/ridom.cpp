// Command-line front end: solve single instances, run exhaustive theorem
// scans, and emit products with K_k.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ridom/bounds.hpp"
#include "ridom/checks.hpp"
#include "ridom/graph6.hpp"
#include "ridom/mis.hpp"
#include "ridom/rainbow.hpp"
#include "ridom/report.hpp"
#include "ridom/solver.hpp"

using namespace ridom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SolveArgs {
  int k = 2;
  std::string family;
  std::string input;
  std::string format = "graph6";
  std::string invariants = "rik";
  std::string output = "json";
  std::string strategy = "degree";
  bool witness = false;
  bool timing = false;
};

GidStrategy parse_strategy(const std::string& name) {
  if (name == "degree") return GidStrategy::ByDegree;
  if (name == "index") return GidStrategy::ByIndex;
  throw std::invalid_argument("unknown strategy: " + name);
}

ResultRecord solve_one(const Graph& g, int k, const std::string& invariant,
                       bool witness, GidStrategy strategy) {
  ResultRecord rec;
  rec.graph6 = g.order() <= 62 ? emit_graph6(g) : std::string("(n>62)");
  rec.n = g.order();
  rec.k = k;
  rec.invariant = invariant;

  if (invariant == "rik") {
    SolveOptions opts;
    opts.want_witness = witness;
    opts.strategy = strategy;
    const SolveResult res = solve_rik(g, k, opts);
    rec.value = res.value;
    rec.lower = res.stats.root_lower;
    rec.upper = res.stats.root_upper;
    rec.nodes = res.stats.nodes;
    rec.millis = res.stats.millis;
    if (witness && res.witness) rec.witness = res.witness->to_string();
  } else if (invariant == "i") {
    const auto res = independent_domination_number(g);
    rec.value = res.value;
    rec.lower = g.order() > 0 ? 1 : 0;
    rec.upper = g.order();
    rec.nodes = res.sets_enumerated;
    if (witness) rec.witness = res.witness.to_string();
  } else if (invariant == "alpha") {
    rec.value = independence_number(g);
    rec.lower = g.order() > 0 ? 1 : 0;
    rec.upper = g.order();
  } else if (invariant == "gamma") {
    rec.value = domination_number(g);
    rec.lower = g.order() > 0 ? 1 : 0;
    rec.upper = g.order();
  } else if (invariant == "rk" || invariant == "irk") {
    const RainbowResult res =
        invariant == "rk" ? rainbow_domination_number(g, k, witness)
                          : independent_rainbow_domination_number(g, k, witness);
    rec.value = res.value;
    rec.lower = res.stats.root_lower;
    rec.upper = res.stats.root_upper;
    rec.nodes = res.stats.nodes;
    rec.millis = res.stats.millis;
    if (witness && res.witness) rec.witness = res.witness->to_string();
  } else {
    throw std::invalid_argument("unknown invariant: " + invariant);
  }
  return rec;
}

int cmd_solve(const SolveArgs& args) {
  if (args.k < 1) {
    std::cerr << "error: k must be positive\n";
    return kExitInputError;
  }
  if (args.family.empty() == args.input.empty()) {
    std::cerr << "error: exactly one of --family or --input is required\n";
    return kExitInputError;
  }
  const OutputFormat format = parse_output_format(args.output);
  const GidStrategy strategy = parse_strategy(args.strategy);
  const auto invariants = split_list(args.invariants);
  if (invariants.empty()) {
    std::cerr << "error: no invariant requested\n";
    return kExitInputError;
  }

  std::vector<Graph> graphs;
  int status = kExitOk;
  if (!args.family.empty()) {
    graphs.push_back(build_family(FamilySpec::parse(args.family)));
  } else if (args.format == "edgelist") {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "error: cannot open " << args.input << '\n';
      return kExitInputError;
    }
    graphs.push_back(read_edge_list(in));
  } else if (args.format == "graph6") {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "error: cannot open " << args.input << '\n';
      return kExitInputError;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const std::invalid_argument& e) {
        std::cerr << args.input << ':' << lineno << ": " << e.what() << '\n';
        status = kExitInputError;  // keep going
      }
    }
  } else {
    std::cerr << "error: unknown input format: " << args.format << '\n';
    return kExitInputError;
  }

  if (format == OutputFormat::Csv) write_csv_header(std::cout);
  for (const auto& g : graphs)
    for (const auto& invariant : invariants) {
      try {
        const ResultRecord rec =
            solve_one(g, args.k, invariant, args.witness, strategy);
        write_record(std::cout, rec, format, args.timing);
      } catch (const GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << '\n';
        status = status == kExitOk ? kExitGuard : status;
      }
    }
  return status;
}

struct VerifyArgs {
  std::string check;
  int n = 5;
  int max_n = 10;
  int k = 2;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x5eed5eedULL;
  std::string corpus;
  std::string records;
  std::string output = "human";
  std::string target = "upper";
  bool serial = false;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& args) {
  const OutputFormat format = parse_output_format(args.output);

  std::optional<FileCorpus> file_corpus;
  ScanSettings settings;
  settings.exec.parallel = !args.serial;
  if (!args.corpus.empty()) {
    file_corpus.emplace(FileCorpus::load(args.corpus));
    settings.corpus = &*file_corpus;
  }

  std::ofstream records_out;
  if (!args.records.empty()) {
    records_out.open(args.records);
    if (!records_out) {
      std::cerr << "error: cannot open " << args.records << '\n';
      return kExitInputError;
    }
    const OutputFormat rec_format =
        format == OutputFormat::JsonLines ? OutputFormat::JsonLines
                                          : OutputFormat::Csv;
    if (rec_format == OutputFormat::Csv)
      write_scan_record_csv_header(records_out);
    settings.record_sink = [&records_out, rec_format](std::uint64_t idx,
                                                      const Graph& g,
                                                      const GraphVerdict& v) {
      write_scan_record(records_out, idx, emit_graph6(g), g.order(), v,
                        rec_format);
    };
  }

  if (args.check == "families") {
    const FamilyScanReport report = check_family_formulas(args.max_n);
    std::cout << "check families: " << report.instances << " instances, "
              << report.mismatches.size() << " mismatches";
    if (args.timing) std::cout << " (" << report.millis << " ms)";
    std::cout << '\n';
    for (const auto& m : report.mismatches)
      std::cout << "  mismatch " << m.family << " n=" << m.n << " expected "
                << m.expected << " got " << m.actual << '\n';
    return report.clean() ? kExitOk : kExitCounterexample;
  }

  ScanReport report;
  if (args.check == "nordhaus-gaddum") {
    report = scan_nordhaus_gaddum(args.n, settings);
  } else if (args.check == "trees") {
    TreeScanPlan plan;
    plan.max_n = args.max_n;
    plan.samples = args.samples;
    plan.seed = args.seed;
    report = scan_trees(plan, settings);
  } else if (args.check == "lemmas") {
    report = scan_lemmas(args.n, settings);
  } else if (args.check == "corollary") {
    report = scan_corollary(args.n, args.k, settings);
  } else if (args.check == "wu-xing") {
    report = scan_wu_xing(args.n, settings);
  } else if (args.check == "oracle") {
    report = scan_oracle_equivalence(args.n, args.k, settings);
  } else if (args.check == "characterization") {
    report = scan_characterization(args.n, args.k, settings);
  } else if (args.check == "properties") {
    report = scan_invariant_properties(args.n, args.k, settings);
  } else if (args.check == "extremal") {
    if (args.target != "lower" && args.target != "upper") {
      std::cerr << "error: --target must be lower or upper\n";
      return kExitInputError;
    }
    report = find_extremal(
        args.n, args.target == "lower" ? NgBound::Lower : NgBound::Upper,
        settings);
    write_scan_report(std::cout, report, format, args.timing);
    const auto& attainers = args.target == "lower" ? report.lower_attainers
                                                   : report.upper_attainers;
    for (const auto& g6 : attainers) std::cout << g6 << '\n';
    return report.clean() ? kExitOk : kExitCounterexample;
  } else {
    std::cerr << "error: unknown check: " << args.check << '\n';
    return kExitInputError;
  }

  write_scan_report(std::cout, report, format, args.timing);
  return report.clean() ? kExitOk : kExitCounterexample;
}

struct ProductArgs {
  int k = 2;
  std::string family;
  std::string input;
  std::string format = "graph6";
  std::string emit = "graph6";
};

int cmd_product(const ProductArgs& args) {
  if (args.k < 1) {
    std::cerr << "error: k must be positive\n";
    return kExitInputError;
  }
  if (args.family.empty() == args.input.empty()) {
    std::cerr << "error: exactly one of --family or --input is required\n";
    return kExitInputError;
  }
  Graph g;
  if (!args.family.empty()) {
    g = build_family(FamilySpec::parse(args.family));
  } else {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "error: cannot open " << args.input << '\n';
      return kExitInputError;
    }
    if (args.format == "edgelist") {
      g = read_edge_list(in);
    } else {
      std::string line;
      if (!std::getline(in, line)) {
        std::cerr << "error: empty input\n";
        return kExitInputError;
      }
      g = parse_graph6(line);
    }
  }
  const Graph product = cartesian_product(g, complete_graph(args.k));
  if (args.emit == "graph6") {
    if (product.order() > 62) {
      std::cerr << "error: product order " << product.order()
                << " exceeds the graph6 limit; use --emit edgelist\n";
      return kExitInputError;
    }
    std::cout << emit_graph6(product) << '\n';
  } else if (args.emit == "edgelist") {
    write_edge_list(product, std::cout);
  } else {
    std::cerr << "error: unknown emit format: " << args.emit << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact rainbow independent domination toolkit: solvers, bounds, and "
      "exhaustive small-order verification scans"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --guard appear after the subcommand name

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Compute invariants for graphs from a family spec or a file");
  solve->add_option("--k", solve_args.k, "number of colors")
      ->default_val(2);
  solve->add_option("--family", solve_args.family,
                    "family spec, e.g. path:5, cycle:6, kmulti:2,3,3");
  solve->add_option("--input", solve_args.input, "input file");
  solve->add_option("--format", solve_args.format,
                    "input format: graph6 | edgelist")
      ->default_val("graph6");
  solve->add_option("--invariant", solve_args.invariants,
                    "comma list of rik,i,alpha,gamma,rk,irk")
      ->default_val("rik");
  solve->add_option("--output", solve_args.output, "json | csv | human")
      ->default_val("json");
  solve->add_option("--strategy", solve_args.strategy,
                    "greedy peel order: degree | index")
      ->default_val("degree");
  solve->add_flag("--witness", solve_args.witness, "emit an optimal labeling");
  solve->add_flag("--timing", solve_args.timing,
                  "include wall-clock fields in records");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify",
      "Run an exhaustive check: nordhaus-gaddum | trees | families | lemmas "
      "| corollary | wu-xing | oracle | characterization | properties | "
      "extremal");
  verify->add_option("check", verify_args.check, "check name")->required();
  verify->add_option("--n", verify_args.n, "graph order for per-order scans")
      ->default_val(5);
  verify->add_option("--max-n", verify_args.max_n,
                     "largest order for families/trees")
      ->default_val(10);
  verify->add_option("--k", verify_args.k, "number of colors")->default_val(2);
  verify->add_option("--samples", verify_args.samples,
                     "sampled trees beyond full enumeration")
      ->default_val(100000);
  verify->add_option("--seed", verify_args.seed, "sampling seed");
  verify->add_option("--corpus", verify_args.corpus,
                     "graph6 file overriding the built-in enumeration");
  verify->add_option("--records", verify_args.records,
                     "stream per-graph records to this file");
  verify->add_option("--output", verify_args.output, "json | csv | human")
      ->default_val("human");
  verify->add_option("--target", verify_args.target,
                     "extremal bound: lower | upper")
      ->default_val("upper");
  verify->add_flag("--serial", verify_args.serial,
                   "force the serial reference scan");
  verify->add_flag("--timing", verify_args.timing,
                   "include wall-clock fields in reports");

  ProductArgs product_args;
  auto* product = app.add_subcommand(
      "product", "Emit the Cartesian product of the input with K_k");
  product->add_option("--k", product_args.k, "number of colors")
      ->default_val(2);
  product->add_option("--family", product_args.family, "family spec");
  product->add_option("--input", product_args.input, "input file");
  product->add_option("--format", product_args.format,
                      "input format: graph6 | edgelist")
      ->default_val("graph6");
  product->add_option("--emit", product_args.emit,
                      "output format: graph6 | edgelist")
      ->default_val("graph6");

  int guard = 0;
  app.add_option("--guard", guard,
                 "override the product-oracle vertex guard "
                 "(RIDOM_GUARD_VERTICES)");

  CLI11_PARSE(app, argc, argv);

  if (guard > 0) setenv("RIDOM_GUARD_VERTICES", std::to_string(guard).c_str(), 1);

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args);
    if (*product) return cmd_product(product_args);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
