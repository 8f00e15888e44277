#include "ridom/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <stdexcept>

#include "ridom/graph6.hpp"
#include "ridom/prufer.hpp"

namespace ridom {

LabeledGraphCorpus::LabeledGraphCorpus(int n) : n_(n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument(
        "built-in labeled enumeration supports n <= 7; supply a graph6 file "
        "beyond that");
  count_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph LabeledGraphCorpus::graph(std::uint64_t index) const {
  Graph g(n_);
  int t = 0;
  for (int col = 1; col < n_; ++col)
    for (int row = 0; row < col; ++row, ++t)
      if ((index >> t) & 1) g.add_edge(row, col);
  return g;
}

std::string LabeledGraphCorpus::descriptor() const {
  return "labeled-graphs:n=" + std::to_string(n_);
}

LabeledTreeCorpus::LabeledTreeCorpus(int n) : n_(n) {
  if (n < 2 || n > 12)
    throw std::invalid_argument("tree enumeration supports 2 <= n <= 12");
  count_ = labeled_tree_count(n);
}

Graph LabeledTreeCorpus::graph(std::uint64_t index) const {
  return prufer_decode(prufer_unrank(n_, index), n_);
}

std::string LabeledTreeCorpus::descriptor() const {
  return "labeled-trees:n=" + std::to_string(n_);
}

SampledTreeCorpus::SampledTreeCorpus(int n, std::uint64_t samples,
                                     std::uint64_t seed)
    : n_(n), samples_(samples), seed_(seed) {
  if (n < 2) throw std::invalid_argument("trees need n >= 2");
  if (n > 32) throw std::invalid_argument("sampled trees capped at n <= 32");
}

namespace {

// splitmix64; gives an independent stream per (seed, index).
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Graph SampledTreeCorpus::graph(std::uint64_t index) const {
  TreeCode code;
  code.seq.reserve(static_cast<std::size_t>(n_ - 2));
  std::uint64_t state = mix64(seed_ ^ mix64(index + 1));
  for (int i = 0; i < n_ - 2; ++i) {
    state = mix64(state);
    code.seq.push_back(static_cast<int>(state % static_cast<std::uint64_t>(n_)));
  }
  return prufer_decode(code, n_);
}

std::string SampledTreeCorpus::descriptor() const {
  return "sampled-trees:n=" + std::to_string(n_) +
         ",samples=" + std::to_string(samples_) +
         ",seed=" + std::to_string(seed_);
}

FileCorpus::FileCorpus(std::string name, std::vector<Graph> graphs)
    : name_(std::move(name)), graphs_(std::move(graphs)) {}

FileCorpus FileCorpus::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return FileCorpus(path, std::move(graphs));
}

Graph FileCorpus::graph(std::uint64_t index) const {
  return graphs_.at(static_cast<std::size_t>(index));
}

std::string FileCorpus::descriptor() const { return "file:" + name_; }

void scan_corpus(const Corpus& corpus,
                 const std::function<GraphVerdict(const Graph&)>& eval,
                 const std::function<void(std::uint64_t, const GraphVerdict&)>&
                     consume,
                 const ScanExec& exec) {
  const std::uint64_t total = corpus.size();
  if (!exec.parallel) {
    for (std::uint64_t i = 0; i < total; ++i)
      consume(i, eval(corpus.graph(i)));
    return;
  }

  const std::uint64_t block =
      exec.block_size > 0 ? static_cast<std::uint64_t>(exec.block_size) : 8192;
  std::vector<GraphVerdict> buffer(static_cast<std::size_t>(block));
  // Exceptions must not escape the parallel region; the first one wins and
  // is rethrown once the block drains.
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (std::uint64_t base = 0; base < total; base += block) {
    const std::int64_t len =
        static_cast<std::int64_t>(std::min(block, total - base));
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t off = 0; off < len; ++off) {
      if (failed.load(std::memory_order_relaxed)) continue;
      const std::uint64_t idx = base + static_cast<std::uint64_t>(off);
      try {
        buffer[static_cast<std::size_t>(off)] = eval(corpus.graph(idx));
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true))
          failure = std::current_exception();
      }
    }
    if (failed.load()) std::rethrow_exception(failure);
    // Emission stays in index order, so both modes stream identically.
    for (std::int64_t off = 0; off < len; ++off)
      consume(base + static_cast<std::uint64_t>(off),
              buffer[static_cast<std::size_t>(off)]);
  }
}

}  // namespace ridom
