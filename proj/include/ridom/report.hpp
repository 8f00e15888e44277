#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ridom/scan.hpp"

namespace ridom {

enum class OutputFormat { JsonLines, Csv, Human };

OutputFormat parse_output_format(const std::string& name);

// One solved instance. Field order in every format:
// graph6, n, k, invariant, value, witness, lower, upper, nodes, millis.
struct ResultRecord {
  std::string graph6;
  int n = 0;
  int k = 0;
  std::string invariant;
  int value = 0;
  std::optional<std::string> witness;
  int lower = 0;
  int upper = 0;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

void write_csv_header(std::ostream& out);
// `timing` gates the millis field; leaving it off keeps output byte-stable
// across runs.
void write_record(std::ostream& out, const ResultRecord& rec,
                  OutputFormat format, bool timing);

void write_scan_report(std::ostream& out, const ScanReport& report,
                       OutputFormat format, bool timing);

// Per-graph scan record stream (verify --records).
void write_scan_record_csv_header(std::ostream& out);
void write_scan_record(std::ostream& out, std::uint64_t index,
                       const std::string& graph6, int n,
                       const GraphVerdict& verdict, OutputFormat format);

}  // namespace ridom
