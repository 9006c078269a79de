#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "annigraph/graph.hpp"
#include "annigraph/parse.hpp"
#include "annigraph/topology.hpp"
#include "support.hpp"

using namespace annigraph;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

// Counter-clockwise order of the drawn edges around each vertex.
RotationSystem figure_rotation(const Graph& g) {
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < g.num_vertices(); ++v) index[g.label(v)] = v;
  RotationSystem rot;
  rot.order.resize(g.num_vertices());
  for (const auto& fv : testsupport::torus_figure()) {
    auto arcs = fv.arcs;
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
      return std::atan2(a.dy, a.dx) < std::atan2(b.dy, b.dx);
    });
    for (const auto& a : arcs) rot.order[index.at(fv.label)].push_back(index.at(a.to));
  }
  return rot;
}

void check_embedding(const Graph& g, const GenusResult& r) {
  REQUIRE(r.embedding);
  CHECK(trace_faces(g, r.embedding->rotation).genus == r.genus);
}

}  // namespace

TEST_CASE("face tracing") {
  const Graph k4 = Graph::complete(4);
  // straight-line drawing: 0 in the middle of triangle 1,2,3
  RotationSystem planar{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
  const EmbeddingResult e = trace_faces(k4, planar);
  CHECK(e.genus == 0);
  CHECK(e.faces == 4);

  const Graph fig = annihilator_graph(ring_from_string("Z2 x Z2 x Z3"));
  const EmbeddingResult torus = trace_faces(fig, figure_rotation(fig));
  CHECK(torus.faces == 10);
  CHECK(torus.genus == 1);

  // isolated vertex: one face, genus 0
  CHECK(trace_faces(Graph::from_edges(1, {}), RotationSystem{{{}}}).genus == 0);

  try {
    trace_faces(k4, RotationSystem{{{1, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}});
    FAIL("incomplete rotation accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::InvalidRotation);
  }
}

TEST_CASE("closed forms") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(closed_form_genus(Kn{n}) == testsupport::kn_genus(n));
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = 1; n <= 8; ++n) CHECK(closed_form_genus(Kmn{m, n}) == testsupport::kmn_genus(m, n));
  CHECK(to_string(TargetGraph{Kmn{3, 3}}) == "K3,3");
}

TEST_CASE("genus of named graphs") {
  for (std::size_t n = 3; n <= 7; ++n) {
    INFO("K" << n);
    const Graph g = Graph::complete(n);
    const GenusResult r = min_genus(g);
    CHECK(r.status == GenusStatus::Exact);
    CHECK(r.genus == testsupport::kn_genus(n));
    check_embedding(g, r);
  }
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 3}, {3, 4}, {4, 4}, {3, 6}, {4, 5}}) {
    INFO("K" << m << "," << n);
    const Graph g = Graph::complete_bipartite(m, n);
    const GenusResult r = min_genus(g);
    CHECK(r.genus == testsupport::kmn_genus(m, n));
    check_embedding(g, r);
  }
  const GenusResult p = min_genus(petersen());
  CHECK(p.genus == 1);
  check_embedding(petersen(), p);
  CHECK(min_genus(Graph::from_edges(3, {})).genus == 0);
}

TEST_CASE("budgets") {
  const GenusResult above = min_genus(Graph::complete(8), GenusBudget{1, 50'000'000, true});
  CHECK(above.status == GenusStatus::AboveMax);
  CHECK(above.genus >= 2);
  CHECK_FALSE(above.embedding);

  const GenusResult tired = min_genus(Graph::complete_bipartite(5, 6), GenusBudget{3, 20, true});
  CHECK(tired.status == GenusStatus::Exhausted);
  CHECK(tired.genus <= testsupport::kmn_genus(5, 6));
  CHECK(to_string(GenusStatus::Exhausted) == "exhausted");
}

TEST_CASE("lower bound") {
  CHECK(genus_lower_bound(Graph::complete(7)) == 1);
  CHECK(genus_lower_bound(Graph::complete_bipartite(4, 4)) == 1);
  CHECK(genus_lower_bound(cycle(6)) == 0);
  CHECK(genus_lower_bound(Graph::from_edges(4, {{0, 1}, {1, 2}})) == 0);
}

TEST_CASE("subdivision search") {
  const Ring z2_4 = ring_from_string("Z2 x Z2 x Z2 x Z2");
  const Graph g = annihilator_graph(z2_4);
  std::vector<Vertex> five;
  for (const char* l : {"(1,1,0,0)", "(0,1,1,0)", "(0,0,1,1)", "(1,0,1,0)", "(0,1,0,1)"}) {
    const auto it = std::find(g.labels().begin(), g.labels().end(), l);
    REQUIRE(it != g.labels().end());
    five.push_back(static_cast<Vertex>(it - g.labels().begin()));
  }
  const SubdivisionResult k5 = find_subdivision(g, Kn{5}, 10'000'000, five);
  REQUIRE(k5.witness);
  CHECK(validate_witness(g, *k5.witness));
  std::vector<Vertex> branch = k5.witness->branch;
  std::sort(branch.begin(), branch.end());
  std::sort(five.begin(), five.end());
  CHECK(branch == five);

  const Graph z43 = annihilator_graph(ring_from_string("Z4 x Z3"));
  const SubdivisionResult k33 = find_subdivision(z43, Kmn{3, 3});
  REQUIRE(k33.witness);
  CHECK(witness_defect(z43, *k33.witness).empty());

  CHECK(find_subdivision(cycle(5), Kn{5}).status == SearchStatus::None);
  CHECK(find_subdivision(cycle(8), Kmn{3, 3}).status == SearchStatus::None);

  // a subdivided K3,3: every edge of K3,3 through its own middle vertex
  std::vector<Edge> sub;
  Vertex next = 6;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) {
      sub.emplace_back(a, next);
      sub.emplace_back(next++, b);
    }
  const Graph s = Graph::from_edges(next, sub);
  const SubdivisionResult found = find_subdivision(s, Kmn{3, 3});
  REQUIRE(found.witness);
  CHECK(validate_witness(s, *found.witness));

  SubdivisionWitness broken = *k33.witness;
  broken.paths[0].back() = broken.paths[0].front();
  CHECK_FALSE(validate_witness(z43, broken));
}

TEST_CASE("planarity certificates") {
  for (const Graph& g : {Graph::complete(5), Graph::complete_bipartite(3, 3), petersen()}) {
    const PlanarityResult r = is_planar(g);
    CHECK_FALSE(r.planar);
    CHECK(planarity_certificate_defect(g, r).empty());
  }
  const PlanarityResult k4 = is_planar(Graph::complete(4));
  CHECK(k4.planar);
  CHECK(planarity_certificate_defect(Graph::complete(4), k4).empty());
  for (const char* e : {"Z2 x Z2 x Z7", "Z50", "Z2 x Z3 x GF(9)"}) {
    const Graph g = annihilator_graph(ring_from_string(e));
    CHECK(planarity_certificate_defect(g, is_planar(g)).empty());
  }
}

TEST_CASE("blocks") {
  // two triangles sharing vertex 2, plus a pendant edge
  const Graph bowtie = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
  const auto blocks = biconnected_blocks(bowtie);
  CHECK(blocks.size() == 3);
  std::size_t edges = 0;
  for (const auto& b : blocks) edges += b.size();
  CHECK(edges == bowtie.num_edges());
}

TEST_CASE("property: genus invariants on random graphs") {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = testsupport::uniform(4, 9);
    const Graph g = testsupport::random_graph(n, 0.5);
    INFO("trial " << trial << " n=" << n << " m=" << g.num_edges());
    const GenusResult r = min_genus(g);
    REQUIRE(r.status == GenusStatus::Exact);
    check_embedding(g, r);
    CHECK(genus_lower_bound(g) <= r.genus);

    // planarity test and genus search are independent
    const PlanarityResult p = is_planar(g);
    CHECK(p.planar == (r.genus == 0));
    CHECK(planarity_certificate_defect(g, p).empty());

    const Graph h = testsupport::relabel(g, testsupport::random_permutation(n));
    CHECK(min_genus(h).genus == r.genus);

    const GenusResult whole = min_genus(g, GenusBudget{3, 50'000'000, false});
    CHECK(whole.genus == r.genus);

    // block additivity: disjoint union adds genera
    const Graph other = testsupport::random_graph(testsupport::uniform(3, 6), 0.6);
    CHECK(min_genus(testsupport::disjoint_union(g, other)).genus == r.genus + min_genus(other).genus);

    std::size_t block_edges = 0;
    for (const auto& b : biconnected_blocks(g)) block_edges += b.size();
    CHECK(block_edges == g.num_edges());
  }
}
