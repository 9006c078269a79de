#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/ring.hpp"
#include "annigraph/topology.hpp"

namespace annigraph {

struct Expectation {
  bool planar = false;
  bool toroidal = false;
  std::optional<std::size_t> genus;
  std::optional<std::string> shape;
};

struct CorpusEntry {
  std::string expr;
  Expectation expected;
  std::string source;
};

/// Rings named in the planar and toroidal classification lists, with expected graph properties.
std::vector<CorpusEntry> builtin_corpus();

/// One JSON object per line; blank lines are skipped. Throws InvalidCorpus with the line number.
std::vector<CorpusEntry> load_corpus(std::istream& in);
std::string corpus_to_jsonl(const std::vector<CorpusEntry>& entries);

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);

struct EntryResult {
  CorpusEntry entry;
  Verdict verdict = Verdict::Fail;
  std::optional<std::size_t> ring_order;
  std::optional<GraphStats> stats;
  std::optional<std::string> shape;
  std::optional<bool> planar;
  std::optional<bool> toroidal;  // empty when the genus search could not decide
  std::optional<GenusResult> genus;
  std::vector<std::string> problems;  // mismatches or errors, empty on PASS
  double seconds = 0.0;               // wall time; not part of emitted reports
};

struct VerificationReport {
  std::vector<EntryResult> entries;
  std::vector<std::string> notes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
};

EntryResult verify_entry(const CorpusEntry& entry, const GenusBudget& budget = {});
VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const GenusBudget& budget = {});

/// Exit status convention shared by `verify` and `survey`: 0 all pass, 1 any fail, 3 otherwise.
int exit_code(const VerificationReport& report);

/// Compact genus text: "1", ">=4", ">=2 (search budget exhausted)".
std::string genus_text(const GenusResult& g);

enum class ReportFormat { Markdown, Csv, Json };
std::string emit_report(const VerificationReport& report, ReportFormat format);

struct Prediction {
  bool planar = false;
  bool toroidal = false;
  std::string rule;
};

/// Planarity and toroidality of AG(R) decided from ring structure alone.
Prediction predict_classification(const Ring& ring);

/// Rings of order <= max_order (max_order <= 256) used for the consistency sweep.
std::vector<Ring> enumerate_family(std::size_t max_order);

/// Runs the consistency sweep: each family ring is verified against its own prediction.
VerificationReport survey(std::size_t max_order, const GenusBudget& budget = {});

/// Literal catalog presentations that fail the |m| in {7, 8} check, as human-readable lines.
std::vector<std::string> catalog_flags();

enum class GraphFormat { Dot, Json };
std::string export_graph(const Graph& g, GraphFormat format);

}  // namespace annigraph
