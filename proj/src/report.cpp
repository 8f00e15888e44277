#include "ridom/report.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace ridom {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json" || name == "jsonl" || name == "json-lines")
    return OutputFormat::JsonLines;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "human") return OutputFormat::Human;
  throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "graph6,n,k,invariant,value,witness,lower,upper,nodes,millis\r\n";
}

void write_record(std::ostream& out, const ResultRecord& rec,
                  OutputFormat format, bool timing) {
  switch (format) {
    case OutputFormat::JsonLines: {
      nlohmann::ordered_json j;
      j["graph6"] = rec.graph6;
      j["n"] = rec.n;
      j["k"] = rec.k;
      j["invariant"] = rec.invariant;
      j["value"] = rec.value;
      if (rec.witness) j["witness"] = *rec.witness;
      j["lower"] = rec.lower;
      j["upper"] = rec.upper;
      j["nodes"] = rec.nodes;
      if (timing) j["millis"] = rec.millis;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << csv_field(rec.graph6) << ',' << rec.n << ',' << rec.k << ','
          << csv_field(rec.invariant) << ',' << rec.value << ','
          << csv_field(rec.witness.value_or("")) << ',' << rec.lower << ','
          << rec.upper << ',' << rec.nodes << ',';
      if (timing) out << rec.millis;
      out << "\r\n";
      break;
    }
    case OutputFormat::Human: {
      out << rec.invariant << '(' << rec.graph6 << ") = " << rec.value << '\n';
      out << "  bounds: lower " << rec.lower << ", upper " << rec.upper
          << '\n';
      if (rec.witness) out << "  witness: " << *rec.witness << '\n';
      out << "  nodes: " << rec.nodes;
      if (timing) out << ", time: " << rec.millis << " ms";
      out << '\n';
      break;
    }
  }
}

void write_scan_report(std::ostream& out, const ScanReport& report,
                       OutputFormat format, bool timing) {
  switch (format) {
    case OutputFormat::JsonLines: {
      nlohmann::ordered_json j;
      j["check"] = report.check;
      j["corpus"] = report.corpus;
      j["graphs"] = report.graphs;
      j["violations"] = report.violations;
      j["counterexamples"] = report.counterexamples;
      j["lower_attainers"] = report.lower_attainer_count;
      j["upper_attainers"] = report.upper_attainer_count;
      if (!report.lower_attainers.empty())
        j["lower_attainer_graphs"] = report.lower_attainers;
      if (!report.upper_attainers.empty())
        j["upper_attainer_graphs"] = report.upper_attainers;
      if (timing) j["millis"] = report.millis;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << "check,corpus,graphs,violations,lower_attainers,upper_attainers,"
             "millis\r\n";
      out << csv_field(report.check) << ',' << csv_field(report.corpus) << ','
          << report.graphs << ',' << report.violations << ','
          << report.lower_attainer_count << ',' << report.upper_attainer_count
          << ',';
      if (timing) out << report.millis;
      out << "\r\n";
      break;
    }
    case OutputFormat::Human: {
      out << "check " << report.check << " over " << report.corpus << ": "
          << report.graphs << " graphs, " << report.violations
          << " violations";
      if (timing) out << " (" << report.millis << " ms)";
      out << '\n';
      if (report.lower_attainer_count || report.upper_attainer_count)
        out << "  bound attainers: lower " << report.lower_attainer_count
            << ", upper " << report.upper_attainer_count << '\n';
      for (const auto& g6 : report.counterexamples)
        out << "  counterexample: " << g6 << '\n';
      break;
    }
  }
}

void write_scan_record_csv_header(std::ostream& out) {
  out << "index,graph6,n,ok,v0,v1,v2,v3\r\n";
}

void write_scan_record(std::ostream& out, std::uint64_t index,
                       const std::string& graph6, int n,
                       const GraphVerdict& verdict, OutputFormat format) {
  switch (format) {
    case OutputFormat::JsonLines: {
      nlohmann::ordered_json j;
      j["index"] = index;
      j["graph6"] = graph6;
      j["n"] = n;
      j["ok"] = verdict.ok;
      j["values"] = {verdict.values[0], verdict.values[1], verdict.values[2],
                     verdict.values[3]};
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
    case OutputFormat::Human:
      out << index << ',' << csv_field(graph6) << ',' << n << ','
          << (verdict.ok ? 1 : 0) << ',' << verdict.values[0] << ','
          << verdict.values[1] << ',' << verdict.values[2] << ','
          << verdict.values[3] << "\r\n";
      break;
  }
}

}  // namespace ridom
