#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "annigraph/parse.hpp"
#include "annigraph/verify.hpp"

using namespace annigraph;

namespace {

std::string join_labels(const Ring& r, const ElementSet& s) {
  std::string out;
  for (Elem e : s) out += (out.empty() ? "" : ", ") + r.label(e);
  return out;
}

int cmd_info(const std::string& text, bool as_json) {
  const Ring r = ring_from_string(text);
  const ElementClasses cl = element_classes(r);
  const StructurePredicates sp = structure_predicates(r);
  const auto factors = local_decomposition(r);
  if (as_json) {
    nlohmann::ordered_json j;
    j["expr"] = text;
    j["order"] = r.order();
    j["units"] = cl.units.size();
    j["nilpotents"] = cl.nilpotents.size();
    j["zero_divisors"] = cl.zero_divisors.size();
    j["field"] = sp.is_field;
    j["local"] = sp.is_local;
    j["reduced"] = sp.is_reduced;
    j["minimal_prime_orders"] = sp.minimal_prime_orders;
    j["local_factors"] = nlohmann::ordered_json::array();
    for (const auto& f : factors) {
      j["local_factors"].push_back(
          {{"idempotent", r.label(f.idempotent)}, {"order", f.ring.order()}, {"maximal_ideal", f.maximal_ideal_order}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "ring:          " << text << "\n"
            << "order:         " << r.order() << "\n"
            << "units:         " << cl.units.size() << "\n"
            << "|Nil(R)|:      " << cl.nilpotents.size() << "\n"
            << "|Z(R)|:        " << cl.zero_divisors.size() << "\n"
            << "field/local/reduced: " << sp.is_field << "/" << sp.is_local << "/" << sp.is_reduced << "\n";
  if (r.order() <= 64) std::cout << "Nil(R):        {" << join_labels(r, cl.nilpotents) << "}\n";
  std::cout << "local factors: " << factors.size() << "\n";
  for (const auto& f : factors) {
    std::cout << "  e = " << r.label(f.idempotent) << ": order " << f.ring.order() << ", |m| = " << f.maximal_ideal_order
              << "\n";
  }
  return 0;
}

int cmd_graph(const std::string& text, const std::string& format, bool zero_divisor) {
  const Ring r = ring_from_string(text);
  const Graph g = zero_divisor ? zero_divisor_graph(r) : annihilator_graph(r);
  std::cout << export_graph(g, format == "json" ? GraphFormat::Json : GraphFormat::Dot);
  return 0;
}

int cmd_genus(const std::string& text, const GenusBudget& budget) {
  const Graph g = annihilator_graph(ring_from_string(text));
  const GenusResult res = min_genus(g, budget);
  std::cout << "AG(" << text << "): " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, shape "
            << describe_shape(g) << "\n";
  std::cout << "genus: " << genus_text(res) << " [" << to_string(res.status) << ", " << res.nodes
            << " search nodes]\n";
  if (res.embedding) {
    std::cout << "embedding: " << res.embedding->faces << " faces; rotation system:\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::cout << "  " << g.label(v) << ":";
      for (Vertex w : res.embedding->rotation.order[v]) std::cout << " " << g.label(w);
      std::cout << "\n";
    }
  }
  return res.status == GenusStatus::Exhausted ? 3 : 0;
}

ReportFormat format_for(const std::string& path) {
  auto ends = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".csv")) return ReportFormat::Csv;
  if (ends(".json")) return ReportFormat::Json;
  return ReportFormat::Markdown;
}

int finish(const VerificationReport& report, const std::string& report_path) {
  if (report_path.empty()) {
    std::cout << emit_report(report, ReportFormat::Markdown);
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << emit_report(report, format_for(report_path));
    std::cout << report.entries.size() << " entries: " << report.passed << " PASS, " << report.failed << " FAIL, "
              << report.inconclusive << " INCONCLUSIVE; report written to " << report_path << "\n";
  }
  return exit_code(report);
}

int cmd_verify(const std::string& corpus_path, const std::string& report_path, const GenusBudget& budget) {
  VerificationReport report;
  if (corpus_path.empty()) {
    report = run_corpus(builtin_corpus(), budget);
    for (const auto& f : catalog_flags()) report.notes.push_back("catalog presentation flagged: " + f);
  } else {
    std::ifstream in(corpus_path);
    if (!in) throw std::runtime_error("cannot read " + corpus_path);
    report = run_corpus(load_corpus(in), budget);
  }
  return finish(report, report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilating-ideal graphs of finite commutative rings"};
  app.require_subcommand(1);

  std::string expr, format = "dot", corpus, report;
  bool as_json = false, zero_divisor = false;
  GenusBudget budget;
  GenusBudget survey_budget;
  survey_budget.max_genus = 1;
  std::size_t max_order = 64;

  auto* info = app.add_subcommand("info", "ring statistics");
  info->add_option("ring", expr, "ring expression")->required();
  info->add_flag("--json", as_json, "emit JSON");

  auto* graph = app.add_subcommand("graph", "export AG(R) or the zero-divisor graph");
  graph->add_option("ring", expr, "ring expression")->required();
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_flag("--zero-divisor-graph", zero_divisor, "export the classical zero-divisor graph instead");

  auto* genus = app.add_subcommand("genus", "minimum genus of AG(R)");
  genus->add_option("ring", expr, "ring expression")->required();
  genus->add_option("--max-genus", budget.max_genus, "largest genus searched exactly");
  genus->add_option("--node-limit", budget.node_limit, "search node budget");

  auto* verify = app.add_subcommand("verify", "check a corpus of rings against expected graph properties");
  verify->add_option("--corpus", corpus, "JSONL corpus; the built-in corpus when omitted");
  verify->add_option("--report", report, "report file (.md, .csv or .json)");
  verify->add_option("--max-genus", budget.max_genus, "largest genus searched exactly");
  verify->add_option("--node-limit", budget.node_limit, "search node budget");

  auto* survey_cmd = app.add_subcommand("survey", "compare structural predictions with computed planarity/genus");
  survey_cmd->add_option("--max-order", max_order, "largest ring order enumerated (<= 256)")->required();
  survey_cmd->add_option("--report", report, "report file (.md, .csv or .json)");
  survey_cmd->add_option("--max-genus", survey_budget.max_genus, "largest genus searched exactly");
  survey_cmd->add_option("--node-limit", survey_budget.node_limit, "search node budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(expr, as_json);
    if (*graph) return cmd_graph(expr, format, zero_divisor);
    if (*genus) return cmd_genus(expr, budget);
    if (*verify) return cmd_verify(corpus, report, budget);
    if (*survey_cmd) return finish(survey(max_order, survey_budget), report);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << expr << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
