#include <chrono>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "annigraph/catalog.hpp"
#include "annigraph/error.hpp"
#include "annigraph/parse.hpp"
#include "annigraph/verify.hpp"

namespace annigraph {

namespace {

CorpusEntry planar_entry(std::string expr, std::string source, std::optional<std::string> shape = {}) {
  return {std::move(expr), Expectation{true, false, 0, std::move(shape)}, std::move(source)};
}

CorpusEntry toroidal_entry(std::string expr, std::string source) {
  return {std::move(expr), Expectation{false, true, 1, std::nullopt}, std::move(source)};
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (const CatalogRing& r : planar_local_catalog()) {
    out.push_back(planar_entry(r.expr, "planar list: local rings"));
  }
  const std::pair<const char*, int> fields[] = {{"Z2", 2}, {"Z3", 3},    {"GF(4)", 4}, {"Z5", 5},
                                                 {"Z7", 7}, {"GF(8)", 8}, {"GF(9)", 9}};
  for (const char* small : {"Z2", "Z3"}) {
    for (auto [f, q] : fields) {
      out.push_back(planar_entry(std::string(small) + " x " + f,
                                 std::string("planar list: ") + small + " x F_q family, q = " + std::to_string(q)));
    }
  }
  out.push_back(planar_entry("Z2 x Z4", "planar list: non-reduced products"));
  out.push_back(planar_entry("Z2 x Z2[x]/(x^2)", "planar list: non-reduced products"));
  out.push_back(planar_entry("Z2 x Z2 x Z2", "planar list: three-factor reduced ring"));

  for (const char* e : {"Z7 x GF(4)", "Z5 x Z5", "Z5 x GF(4)", "GF(4) x GF(4)"}) {
    out.push_back(toroidal_entry(e, "toroidal list: reduced rings, two fields"));
  }
  out.push_back(toroidal_entry("Z2 x Z2 x Z3", "toroidal list: reduced rings, three factors (torus drawing)"));
  out.push_back(toroidal_entry("Z4 x Z3", "toroidal list: non-reduced products"));
  out.push_back(toroidal_entry("Z2[x]/(x^2) x Z3", "toroidal list: non-reduced products"));
  for (const CatalogRing& r : toroidal_local_catalog()) {
    std::string source = "toroidal list: local rings with |m| in {7, 8}";
    if (r.repaired) source += "; repairs printed " + r.literal;
    out.push_back(toroidal_entry(r.expr, source));
  }

  out.push_back({"Z2 x Z2 x Z2 x Z2", Expectation{false, false, std::nullopt, std::nullopt},
                 "negative witness: four factors contain K5"});
  out.push_back({"Z4 x GF(4)", Expectation{false, false, 2, "E3 v (K3 + E3)"},
                 "negative witness: K3,6 with a triangle in the larger part"});
  out.push_back(planar_entry("Z4 x Z2", "negative witness: AG is K2,3", "K2,3"));
  return out;
}

std::vector<CorpusEntry> load_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      const auto j = nlohmann::json::parse(line);
      CorpusEntry e;
      e.expr = j.at("expr").get<std::string>();
      const auto& x = j.at("expected");
      e.expected.planar = x.at("planar").get<bool>();
      e.expected.toroidal = x.at("toroidal").get<bool>();
      if (x.contains("genus") && !x["genus"].is_null()) e.expected.genus = x["genus"].get<std::size_t>();
      if (x.contains("shape") && !x["shape"].is_null()) e.expected.shape = x["shape"].get<std::string>();
      e.source = j.value("source", "");
      parse_ring_expr(e.expr);
      if (e.expected.planar && e.expected.toroidal) throw Error(ErrorKind::InvalidCorpus, "planar and toroidal");
      if (e.expected.genus) {
        const std::size_t g = *e.expected.genus;
        if ((g == 0) != e.expected.planar || (g == 1) != e.expected.toroidal) {
          throw Error(ErrorKind::InvalidCorpus, "genus " + std::to_string(g) + " contradicts planar/toroidal flags");
        }
      }
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::InvalidCorpus, where + ex.what());
    } catch (const Error& ex) {
      throw Error(ErrorKind::InvalidCorpus, where + ex.what());
    }
  }
  return out;
}

std::string corpus_to_jsonl(const std::vector<CorpusEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["expr"] = e.expr;
    j["expected"]["planar"] = e.expected.planar;
    j["expected"]["toroidal"] = e.expected.toroidal;
    j["expected"]["genus"] = e.expected.genus ? nlohmann::ordered_json(*e.expected.genus) : nullptr;
    j["expected"]["shape"] = e.expected.shape ? nlohmann::ordered_json(*e.expected.shape) : nullptr;
    j["source"] = e.source;
    out += j.dump() + "\n";
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string genus_text(const GenusResult& g) {
  switch (g.status) {
    case GenusStatus::Exact: return std::to_string(g.genus);
    case GenusStatus::AboveMax: return ">=" + std::to_string(g.genus);
    case GenusStatus::Exhausted: return ">=" + std::to_string(g.genus) + " (search budget exhausted)";
  }
  return "?";
}

EntryResult verify_entry(const CorpusEntry& entry, const GenusBudget& budget) {
  EntryResult r;
  r.entry = entry;
  const auto start = std::chrono::steady_clock::now();
  bool undecided = false;
  try {
    const Ring ring = ring_from_string(entry.expr);
    r.ring_order = ring.order();
    const Graph g = annihilator_graph(ring);
    r.stats = graph_stats(g);
    r.shape = describe_shape(g);

    const PlanarityResult pl = is_planar(g);
    if (const std::string d = planarity_certificate_defect(g, pl); !d.empty()) {
      r.problems.push_back("planarity certificate rejected: " + d);
    }
    r.planar = pl.planar;

    const GenusResult gr = min_genus(g, budget);
    r.genus = gr;
    if (pl.planar) {
      r.toroidal = false;
    } else if (gr.status == GenusStatus::Exact) {
      r.toroidal = gr.genus == 1;
    } else if (gr.genus >= 2) {
      r.toroidal = false;
    }
    if (gr.status == GenusStatus::Exact && (gr.genus == 0) != pl.planar) {
      r.problems.push_back("genus search (" + std::to_string(gr.genus) + ") disagrees with planarity test");
    }

    const Expectation& x = entry.expected;
    if (*r.planar != x.planar) {
      r.problems.push_back(std::string("expected ") + (x.planar ? "planar" : "non-planar") + ", computed " +
                           (*r.planar ? "planar" : "non-planar"));
    }
    if (!r.toroidal) {
      undecided = true;
    } else if (*r.toroidal != x.toroidal) {
      r.problems.push_back(std::string("expected ") + (x.toroidal ? "toroidal" : "not toroidal") + ", computed " +
                           (*r.toroidal ? "toroidal" : "not toroidal"));
    }
    if (x.genus) {
      if (gr.status == GenusStatus::Exact) {
        if (gr.genus != *x.genus) {
          r.problems.push_back("expected genus " + std::to_string(*x.genus) + ", computed " + genus_text(gr));
        }
      } else if (gr.genus > *x.genus) {
        r.problems.push_back("expected genus " + std::to_string(*x.genus) + ", computed " + genus_text(gr));
      } else {
        undecided = true;
      }
    }
    if (x.shape && *x.shape != *r.shape) {
      r.problems.push_back("expected shape " + *x.shape + ", computed " + *r.shape);
    }
  } catch (const std::exception& ex) {
    r.problems.push_back(std::string("error: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.verdict = !r.problems.empty() ? Verdict::Fail : undecided ? Verdict::Inconclusive : Verdict::Pass;
  return r;
}

VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const GenusBudget& budget) {
  VerificationReport report;
  for (const auto& e : entries) {
    report.entries.push_back(verify_entry(e, budget));
    switch (report.entries.back().verdict) {
      case Verdict::Pass: ++report.passed; break;
      case Verdict::Fail: ++report.failed; break;
      case Verdict::Inconclusive: ++report.inconclusive; break;
    }
  }
  return report;
}

int exit_code(const VerificationReport& report) {
  if (report.failed) return 1;
  if (report.inconclusive) return 3;
  return 0;
}

}  // namespace annigraph
