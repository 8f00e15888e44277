// Times the theorem scans in serial and OpenMP mode over identical corpora
// and reports the speedup, verifying both modes agree on every aggregate.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ridom/checks.hpp"
#include "ridom/scan.hpp"

using namespace ridom;

namespace {

struct Timed {
  ScanReport report;
  double seconds = 0;
};

template <typename Fn>
Timed timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed out;
  out.report = fn();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  return out;
}

bool agree(const ScanReport& a, const ScanReport& b) {
  return a.graphs == b.graphs && a.violations == b.violations &&
         a.lower_attainer_count == b.lower_attainer_count &&
         a.upper_attainer_count == b.upper_attainer_count &&
         a.counterexamples == b.counterexamples;
}

int run_pair(const std::string& name,
             const std::function<ScanReport(const ScanSettings&)>& scan) {
  ScanSettings serial;
  serial.exec.parallel = false;
  ScanSettings parallel;
  parallel.exec.parallel = true;

  const Timed s = timed([&] { return scan(serial); });
  const Timed p = timed([&] { return scan(parallel); });

  const bool ok = agree(s.report, p.report);
  std::printf("%-28s %10llu graphs  serial %8.3fs  parallel %8.3fs  x%.2f  %s\n",
              name.c_str(),
              static_cast<unsigned long long>(s.report.graphs), s.seconds,
              p.seconds, p.seconds > 0 ? s.seconds / p.seconds : 0.0,
              ok ? "agree" : "MISMATCH");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int ng_n = 6;
  int tree_n = 8;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--ng-n" && i + 1 < argc) ng_n = std::atoi(argv[++i]);
    if (arg == "--tree-n" && i + 1 < argc) tree_n = std::atoi(argv[++i]);
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel mode degrades to serial\n");
#endif

  int failures = 0;
  failures += run_pair("nordhaus-gaddum n=" + std::to_string(ng_n),
                       [&](const ScanSettings& s) {
                         return scan_nordhaus_gaddum(ng_n, s);
                       });
  failures += run_pair("trees max_n=" + std::to_string(tree_n),
                       [&](const ScanSettings& s) {
                         TreeScanPlan plan;
                         plan.max_n = tree_n;
                         return scan_trees(plan, s);
                       });
  failures += run_pair("oracle n=5 k=2", [&](const ScanSettings& s) {
    return scan_oracle_equivalence(5, 2, s);
  });
  failures += run_pair("wu-xing n=5", [&](const ScanSettings& s) {
    return scan_wu_xing(5, s);
  });
  return failures == 0 ? 0 : 1;
}
