#include <sstream>

#include <json.hpp>

#include "annigraph/verify.hpp"

namespace annigraph {

namespace {

std::string expected_text(const Expectation& x) {
  std::string out;
  if (x.genus) {
    out = "genus " + std::to_string(*x.genus);
  } else {
    out = x.planar ? "planar" : x.toroidal ? "toroidal" : "genus >= 2";
  }
  if (x.shape) out += ", shape " + *x.shape;
  return out;
}

std::string count_or_dash(const std::optional<GraphStats>& s, bool edges) {
  if (!s) return "-";
  return std::to_string(edges ? s->size : s->order);
}

std::string genus_cell(const EntryResult& r) { return r.genus ? genus_text(*r.genus) : "-"; }

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string summary_line(const VerificationReport& report) {
  std::string s = std::to_string(report.entries.size()) + " entries: " + std::to_string(report.passed) + " PASS, " +
                  std::to_string(report.failed) + " FAIL, " + std::to_string(report.inconclusive) + " INCONCLUSIVE";
  if (report.inconclusive) s += " (inconclusive entries are not counted as verified)";
  return s;
}

std::string markdown(const VerificationReport& report) {
  std::ostringstream out;
  out << "# AG(R) verification report\n\n";
  out << "| # | ring | order | V | E | shape | genus | expected | verdict | source |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const EntryResult& r = report.entries[i];
    out << "| " << i + 1 << " | `" << md_cell(r.entry.expr) << "` | "
        << (r.ring_order ? std::to_string(*r.ring_order) : "-") << " | " << count_or_dash(r.stats, false) << " | "
        << count_or_dash(r.stats, true) << " | " << md_cell(r.shape.value_or("-")) << " | " << md_cell(genus_cell(r))
        << " | " << md_cell(expected_text(r.entry.expected)) << " | " << to_string(r.verdict) << " | "
        << md_cell(r.entry.source) << " |\n";
  }
  out << "\n" << summary_line(report) << "\n";

  bool header = false;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const EntryResult& r = report.entries[i];
    if (r.problems.empty() && r.verdict != Verdict::Inconclusive) continue;
    if (!header) {
      out << "\n## Problems\n\n";
      header = true;
    }
    out << "- #" << i + 1 << " `" << r.entry.expr << "` " << to_string(r.verdict) << ":";
    if (r.problems.empty()) out << " genus search did not decide (" << genus_cell(r) << ")";
    for (std::size_t k = 0; k < r.problems.size(); ++k) out << (k ? ";" : "") << " " << r.problems[k];
    out << "\n";
  }
  if (!report.notes.empty()) {
    out << "\n## Notes\n\n";
    for (const auto& n : report.notes) out << "- " << n << "\n";
  }
  return out.str();
}

std::string csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "index,expr,order,vertices,edges,shape,genus,expected,verdict,source,problems\r\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const EntryResult& r = report.entries[i];
    std::string problems;
    for (const auto& p : r.problems) problems += (problems.empty() ? "" : "; ") + p;
    out << i + 1 << ',' << csv_cell(r.entry.expr) << ',' << (r.ring_order ? std::to_string(*r.ring_order) : "")
        << ',' << (r.stats ? std::to_string(r.stats->order) : "") << ','
        << (r.stats ? std::to_string(r.stats->size) : "") << ',' << csv_cell(r.shape.value_or("")) << ','
        << csv_cell(r.genus ? genus_text(*r.genus) : "") << ',' << csv_cell(expected_text(r.entry.expected)) << ','
        << to_string(r.verdict) << ',' << csv_cell(r.entry.source) << ',' << csv_cell(problems) << "\r\n";
  }
  return out.str();
}

nlohmann::ordered_json optional_json(const auto& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["summary"] = {{"total", report.entries.size()},
                  {"passed", report.passed},
                  {"failed", report.failed},
                  {"inconclusive", report.inconclusive}};
  j["entries"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const EntryResult& r = report.entries[i];
    nlohmann::ordered_json e;
    e["index"] = i + 1;
    e["expr"] = r.entry.expr;
    e["source"] = r.entry.source;
    e["expected"] = {{"planar", r.entry.expected.planar},
                     {"toroidal", r.entry.expected.toroidal},
                     {"genus", optional_json(r.entry.expected.genus)},
                     {"shape", optional_json(r.entry.expected.shape)}};
    e["verdict"] = std::string(to_string(r.verdict));
    e["order"] = optional_json(r.ring_order);
    e["vertices"] = r.stats ? nlohmann::ordered_json(r.stats->order) : nullptr;
    e["edges"] = r.stats ? nlohmann::ordered_json(r.stats->size) : nullptr;
    e["shape"] = optional_json(r.shape);
    e["planar"] = optional_json(r.planar);
    e["toroidal"] = optional_json(r.toroidal);
    if (r.genus) {
      e["genus"] = {{"status", std::string(to_string(r.genus->status))},
                    {"value", r.genus->genus},
                    {"nodes", r.genus->nodes}};
    } else {
      e["genus"] = nullptr;
    }
    e["problems"] = r.problems;
    j["entries"].push_back(std::move(e));
  }
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Markdown: return markdown(report);
    case ReportFormat::Csv: return csv(report);
    case ReportFormat::Json: return json(report);
  }
  return {};
}

std::string export_graph(const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  if (format == GraphFormat::Json) {
    nlohmann::ordered_json j;
    j["vertices"] = g.labels();
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : edges) j["edges"].push_back({u, v});
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "graph {\n";
  for (const auto& l : g.labels()) out << "  " << dot_quote(l) << ";\n";
  for (auto [u, v] : edges) out << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace annigraph
