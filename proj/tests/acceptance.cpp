// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the annigraph executable.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "annigraph/graph.hpp"
#include "annigraph/parse.hpp"
#include "annigraph/topology.hpp"
#include "annigraph/verify.hpp"
#include "support.hpp"

using namespace annigraph;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

int failures = 0;

void report(int n, const std::string& title, Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << title << ": " << o.detail.str() << std::endl;
  if (!o.ok) ++failures;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int raw = pclose(p);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Face count of a labelled rotation system, traced directly: next dart after (u,v) is (v, succ_v(u)).
std::size_t count_faces(const std::map<std::string, std::vector<std::string>>& rot) {
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t faces = 0;
  for (const auto& [u, around] : rot)
    for (const auto& v : around) {
      if (seen.count({u, v})) continue;
      ++faces;
      std::string a = u, b = v;
      while (seen.insert({a, b}).second) {
        const auto& ring = rot.at(b);
        const auto it = std::find(ring.begin(), ring.end(), a);
        const std::string c = (it + 1 == ring.end()) ? ring.front() : *(it + 1);
        a = b;
        b = c;
      }
    }
  return faces;
}

std::vector<Ring> corpus_rings() {
  std::vector<Ring> out;
  for (const auto& e : builtin_corpus()) out.push_back(ring_from_string(e.expr));
  return out;
}

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// 1. built-in corpus: planar entries genus 0, toroidal entries genus exactly 1, under 5 minutes
void criterion_corpus() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto corpus = builtin_corpus();
  const VerificationReport r = run_corpus(corpus);
  const double secs = since(t0);
  std::size_t planar = 0, toroidal = 0;
  for (const auto& e : r.entries) {
    if (e.verdict != Verdict::Pass) o.fail(e.entry.expr + " " + std::string(to_string(e.verdict)));
    const std::size_t want = e.entry.expected.toroidal ? 1 : 0;
    if (!e.entry.expected.planar && !e.entry.expected.toroidal) continue;
    (want ? toroidal : planar)++;
    if (!e.genus || e.genus->status != GenusStatus::Exact || e.genus->genus != want)
      o.fail(e.entry.expr + " genus is not exactly " + std::to_string(want));
  }
  if (secs > 300) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok)
    o.detail << r.entries.size() << " entries (" << planar << " genus 0, " << toroidal << " genus 1), " << r.passed
             << " PASS in " << secs << " s";
  report(1, "built-in corpus", o);
}

// 2. negative witnesses
void criterion_negative() {
  Outcome o;
  const Graph z2_4 = annihilator_graph(ring_from_string("Z2 x Z2 x Z2 x Z2"));
  std::vector<Vertex> five;
  for (const char* l : {"(1,1,0,0)", "(0,1,1,0)", "(0,0,1,1)", "(1,0,1,0)", "(0,1,0,1)"}) {
    const auto it = std::find(z2_4.labels().begin(), z2_4.labels().end(), l);
    if (it == z2_4.labels().end()) o.fail(std::string("missing vertex ") + l);
    else five.push_back(static_cast<Vertex>(it - z2_4.labels().begin()));
  }
  if (is_planar(z2_4).planar) o.fail("AG(Z2^4) reported planar");
  if (five.size() == 5) {
    const SubdivisionResult k5 = find_subdivision(z2_4, Kn{5}, 10'000'000, five);
    if (!k5.witness) {
      o.fail("no K5 subdivision on the five vertices");
    } else {
      auto branch = k5.witness->branch;
      std::sort(branch.begin(), branch.end());
      std::sort(five.begin(), five.end());
      if (branch != five) o.fail("K5 branch vertices differ");
      if (const auto d = witness_defect(z2_4, *k5.witness); !d.empty()) o.fail("K5 witness: " + d);
    }
  }

  const GenusResult g = min_genus(annihilator_graph(ring_from_string("Z4 x GF(4)")));
  if (g.status != GenusStatus::Exact || g.genus != 2)
    o.fail("AG(Z4 x GF(4)) genus " + genus_text(g) + " [" + std::string(to_string(g.status)) + "]");

  const Graph k23 = annihilator_graph(ring_from_string("Z4 x Z2"));
  if (describe_shape(k23) != "K2,3") o.fail("AG(Z4 x Z2) shape " + describe_shape(k23));
  if (!is_planar(k23).planar) o.fail("AG(Z4 x Z2) non-planar");
  if (o.ok) o.detail << "K5 subdivision on the listed vertices; AG(Z4 x GF(4)) genus 2 (exact); AG(Z4 x Z2) = K2,3, planar";
  report(2, "negative witnesses", o);
}

// 3. the torus drawing of AG(Z2 x Z2 x Z3), including the CLI's rotation system
void criterion_figure(const std::string& cli) {
  Outcome o;
  const Graph g = annihilator_graph(ring_from_string("Z2 x Z2 x Z3"));
  if (g.num_vertices() != 9) o.fail(std::to_string(g.num_vertices()) + " vertices");
  if (testsupport::labelled_edges(g) != testsupport::torus_figure_edges()) o.fail("edge set differs from the drawing");
  const GenusResult r = min_genus(g);
  if (r.status != GenusStatus::Exact || r.genus != 1) o.fail("genus " + genus_text(r));

  int status = 0;
  const std::string out = run_capture(quote(cli) + " genus 'Z2 x Z2 x Z3'", status);
  std::map<std::string, std::vector<std::string>> rot;
  std::istringstream lines(out);
  bool in_rotation = false;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("embedding:", 0) == 0) {
      in_rotation = true;
      continue;
    }
    if (!in_rotation) continue;
    const auto colon = line.find(':');
    std::istringstream words(line.substr(colon + 1));
    auto& around = rot[line.substr(2, colon - 2)];
    for (std::string w; words >> w;) around.push_back(w);
  }
  if (status != 0) o.fail("genus command exited " + std::to_string(status));
  std::size_t darts = 0;
  for (const auto& [v, around] : rot) darts += around.size();
  if (rot.size() != 9 || darts != 2 * g.num_edges()) {
    o.fail("emitted rotation system does not cover the graph");
  } else {
    const std::size_t f = count_faces(rot);
    const long euler = 9L - static_cast<long>(g.num_edges()) + static_cast<long>(f);
    if (euler != 0) o.fail("emitted rotation traces to Euler characteristic " + std::to_string(euler));
    else if (o.ok) o.detail << "9 vertices, " << g.num_edges() << " edges as drawn; emitted rotation has " << f
                            << " faces, genus 1";
  }
  report(3, "torus drawing", o);
}

// 4. search genus against closed forms for K_n and K_m,n
void criterion_closed_forms() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t instances = 0;
  auto check = [&](const Graph& g, std::size_t want, const std::string& name) {
    ++instances;
    const GenusResult r = min_genus(g);
    if (r.status != GenusStatus::Exact || r.genus != want) o.fail(name + " gave " + genus_text(r));
  };
  for (std::size_t n = 3; n <= 7; ++n) check(Graph::complete(n), testsupport::kn_genus(n), "K" + std::to_string(n));
  for (std::size_t m = 2; m * m <= 20; ++m)
    for (std::size_t n = m; m * n <= 20; ++n)
      check(Graph::complete_bipartite(m, n), testsupport::kmn_genus(m, n),
            "K" + std::to_string(m) + "," + std::to_string(n));
  const double secs = since(t0);
  if (instances < 20) o.fail("only " + std::to_string(instances) + " instances");
  if (secs > 120) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail << instances << " instances agree exactly in " << secs << " s";
  report(4, "closed-form genus", o);
}

// 5. the three edge criteria agree on every pair of the order-32 family
void criterion_edge_criteria() {
  Outcome o;
  std::size_t rings = 0, pairs = 0, bad = 0;
  for (const Ring& r : enumerate_family(32)) {
    ++rings;
    const auto zd = element_classes(r).zero_divisors;
    for (Elem x : zd)
      for (Elem y : zd) {
        if (x == r.zero() || y == r.zero() || x >= y) continue;
        ++pairs;
        const EdgeCriteria c = edge_criteria(r, x, y);
        if (c.def_edge != c.ideal_edge || c.def_edge != c.module_edge) {
          if (bad++ == 0) o.fail(r.recipe() + " at " + r.label(x) + ", " + r.label(y));
        }
      }
  }
  if (!o.ok) o.detail << " (" << bad << " discrepancies)";
  else o.detail << rings << " rings, " << pairs << " vertex pairs, 0 discrepancies";
  report(5, "edge criteria", o);
}

// 6. incomparable annihilators force an edge; the converse in reduced rings; zero-divisor graph inside AG
void criterion_annihilator_order() {
  Outcome o;
  std::vector<Ring> rings = enumerate_family(64);
  const auto corpus = corpus_rings();
  rings.insert(rings.end(), corpus.begin(), corpus.end());
  std::size_t forward = 0, converse = 0, gamma_edges = 0, violations = 0;
  auto violation = [&](const std::string& what) {
    if (violations++ == 0) o.fail(what);
  };
  for (const Ring& r : rings) {
    const Graph ag = annihilator_graph(r);
    const bool reduced = structure_predicates(r).is_reduced;
    const auto& el = ag.elements();
    std::vector<ElementSet> ann;
    for (Elem x : el) ann.push_back(annihilator(r, x));
    for (Vertex u = 0; u < ag.num_vertices(); ++u)
      for (Vertex v = u + 1; v < ag.num_vertices(); ++v) {
        const bool incomparable = !subset(ann[u], ann[v]) && !subset(ann[v], ann[u]);
        if (incomparable) {
          ++forward;
          if (!ag.adjacent(u, v)) violation("forward fails in " + r.recipe());
        }
        if (reduced && ag.adjacent(u, v)) {
          ++converse;
          if (!incomparable) violation("reduced converse fails in " + r.recipe());
        }
      }
  }
  for (const Ring& r : corpus) {
    const Graph ag = annihilator_graph(r), gamma = zero_divisor_graph(r);
    for (auto [u, v] : gamma.edges()) {
      ++gamma_edges;
      if (!ag.adjacent(u, v)) violation("zero-divisor edge missing from AG in " + r.recipe());
    }
  }
  if (!o.ok) o.detail << " (" << violations << " violations)";
  else o.detail << rings.size() << " rings; " << forward << " forward, " << converse << " converse, " << gamma_edges
                << " zero-divisor edges checked, 0 violations";
  report(6, "annihilator order", o);
}

// 7. predictions agree with computation on the order-64 family (same budget as `survey`)
void criterion_survey() {
  Outcome o;
  const auto t0 = Clock::now();
  const VerificationReport r = survey(64, GenusBudget{1, 50'000'000, true});
  const double secs = since(t0);
  for (const auto& e : r.entries)
    if (e.verdict != Verdict::Pass) o.fail(e.entry.expr + " " + std::string(to_string(e.verdict)));
  if (secs > 600) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail << r.entries.size() << " rings, 0 mismatches in " << secs << " s";
  report(7, "classification survey", o);
}

// 8. two verify runs write byte-identical reports
void criterion_determinism(const std::string& cli) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("annigraph-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::size_t bytes = 0;
  for (const char* ext : {"md", "csv", "json"}) {
    std::string runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path out = dir / ("run" + std::to_string(k) + "." + ext);
      int status = 0;
      run_capture(quote(cli) + " verify --report " + quote(out.string()), status);
      if (status != 0) o.fail(std::string("verify --report .") + ext + " exited " + std::to_string(status));
      runs[k] = slurp(out);
    }
    if (runs[0].empty()) o.fail(std::string("empty .") + ext + " report");
    if (runs[0] != runs[1]) o.fail(std::string(".") + ext + " reports differ");
    bytes += runs[0].size();
  }
  fs::remove_all(dir);
  if (o.ok) o.detail << "md, csv and json reports identical across runs (" << bytes << " bytes)";
  report(8, "determinism", o);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-annigraph>\n";
    return 2;
  }
  const std::string cli = argv[1];
  criterion_corpus();
  criterion_negative();
  criterion_figure(cli);
  criterion_closed_forms();
  criterion_edge_criteria();
  criterion_annihilator_order();
  criterion_survey();
  criterion_determinism(cli);
  std::cout << (8 - failures) << "/8 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
