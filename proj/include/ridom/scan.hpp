#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ridom/graph.hpp"

namespace ridom {

// An indexable family of graphs a scan walks over. Implementations must be
// safe for concurrent graph(i) calls.
class Corpus {
 public:
  virtual ~Corpus() = default;
  virtual std::uint64_t size() const = 0;
  virtual Graph graph(std::uint64_t index) const = 0;
  virtual std::string descriptor() const = 0;
};

// Every labeled graph on n vertices: index bits are the upper adjacency
// triangle in graph6 column order.
class LabeledGraphCorpus : public Corpus {
 public:
  explicit LabeledGraphCorpus(int n);
  std::uint64_t size() const override { return count_; }
  Graph graph(std::uint64_t index) const override;
  std::string descriptor() const override;

 private:
  int n_;
  std::uint64_t count_;
};

// Every labeled tree on n vertices in Prufer-unrank order.
class LabeledTreeCorpus : public Corpus {
 public:
  explicit LabeledTreeCorpus(int n);
  std::uint64_t size() const override { return count_; }
  Graph graph(std::uint64_t index) const override;
  std::string descriptor() const override;

 private:
  int n_;
  std::uint64_t count_;
};

// Fixed number of pseudorandom labeled trees on n vertices; the sequence is
// a pure function of (n, seed, index), so scans stay reproducible.
class SampledTreeCorpus : public Corpus {
 public:
  SampledTreeCorpus(int n, std::uint64_t samples, std::uint64_t seed);
  std::uint64_t size() const override { return samples_; }
  Graph graph(std::uint64_t index) const override;
  std::string descriptor() const override;

 private:
  int n_;
  std::uint64_t samples_;
  std::uint64_t seed_;
};

// graph6 lines loaded from a file (one graph per line).
class FileCorpus : public Corpus {
 public:
  FileCorpus(std::string name, std::vector<Graph> graphs);
  static FileCorpus load(const std::string& path);
  std::uint64_t size() const override { return graphs_.size(); }
  Graph graph(std::uint64_t index) const override;
  std::string descriptor() const override;

 private:
  std::string name_;
  std::vector<Graph> graphs_;
};

// Compact per-graph result; scans expand interesting indices afterwards.
struct GraphVerdict {
  bool ok = true;
  bool flag_lower = false;  // scan-specific markers (e.g. bound attainment)
  bool flag_upper = false;
  std::int32_t values[4] = {0, 0, 0, 0};
};

struct ScanExec {
  bool parallel = true;   // OpenMP across graphs when available
  int block_size = 8192;  // indices evaluated per emission batch
};

// Walks the corpus, evaluating each graph and handing verdicts to `consume`
// in strictly increasing index order regardless of execution mode, so serial
// and parallel runs produce identical output streams.
void scan_corpus(const Corpus& corpus,
                 const std::function<GraphVerdict(const Graph&)>& eval,
                 const std::function<void(std::uint64_t, const GraphVerdict&)>&
                     consume,
                 const ScanExec& exec);

// Aggregate outcome of one scan.
struct ScanReport {
  std::string corpus;
  std::string check;
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  // graph6, capped
  std::uint64_t lower_attainer_count = 0;
  std::uint64_t upper_attainer_count = 0;
  std::vector<std::string> lower_attainers;  // graph6, capped
  std::vector<std::string> upper_attainers;  // graph6, capped
  double millis = 0.0;

  bool clean() const { return violations == 0; }
};

inline constexpr std::size_t kReportListCap = 4096;

}  // namespace ridom
