#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>

#include "annigraph/error.hpp"
#include "annigraph/topology.hpp"

namespace annigraph {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

bool planar_edges(std::size_t n, const std::vector<Edge>& edges) {
  BoostGraph bg(n);
  int k = 0;
  for (auto [a, b] : edges) boost::add_edge(a, b, k++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Drops edges while the rest stays non-planar. An edge-minimal non-planar
// graph is a subdivision of K5 or K3,3 plus isolated vertices.
std::vector<Edge> minimize_nonplanar(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<Edge> rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!planar_edges(n, rest)) {
      edges = std::move(rest);
    } else {
      ++i;
    }
  }
  return edges;
}

// Branch vertices and the chains between them in a Kuratowski subgraph.
std::optional<SubdivisionWitness> witness_from_kuratowski(const Graph& g, const std::vector<Edge>& edges) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v)
    if (adj[v].size() >= 3) branch.push_back(v);

  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = static_cast<int>(i);

  // Chains between branch vertices, keyed by the (unordered) pair of branch indices.
  std::map<std::pair<int, int>, std::vector<Vertex>> chains;
  for (Vertex s : branch) {
    for (Vertex first : adj[s]) {
      std::vector<Vertex> path{s, first};
      Vertex prev = s, cur = first;
      while (index[cur] < 0) {
        if (adj[cur].size() != 2) return std::nullopt;
        const Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
      }
      const int a = index[s], b = index[cur];
      if (a == b) return std::nullopt;
      chains[{std::min(a, b), std::max(a, b)}] = a < b ? path : std::vector<Vertex>(path.rbegin(), path.rend());
    }
  }

  SubdivisionWitness w;
  if (branch.size() == 5) {
    w.target = Kn{5};
    w.branch = branch;
  } else if (branch.size() == 6) {
    // Split the branch vertices into the two sides using the chain structure.
    std::vector<int> side(6, -1);
    side[0] = 0;
    for (int round = 0; round < 6; ++round)
      for (const auto& [key, path] : chains) {
        auto [a, b] = key;
        if (side[a] >= 0 && side[b] < 0) side[b] = 1 - side[a];
        if (side[b] >= 0 && side[a] < 0) side[a] = 1 - side[b];
      }
    w.target = Kmn{3, 3};
    for (int s : {0, 1})
      for (int i = 0; i < 6; ++i)
        if (side[i] == s) w.branch.push_back(branch[i]);
    if (w.branch.size() != 6) return std::nullopt;
  } else {
    return std::nullopt;
  }
  for (auto [a, b] : target_graph(w.target).edges()) {
    const int ia = index[w.branch[a]], ib = index[w.branch[b]];
    auto it = chains.find({std::min(ia, ib), std::max(ia, ib)});
    if (it == chains.end()) return std::nullopt;
    std::vector<Vertex> path = it->second;
    if (path.front() != w.branch[a]) std::reverse(path.begin(), path.end());
    w.paths.push_back(std::move(path));
  }
  if (!validate_witness(g, w)) return std::nullopt;
  return w;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
  const std::size_t n = g.num_vertices();
  BoostGraph bg(n);
  for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
  int k = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) boost::put(boost::edge_index, bg, *ei, k++);

  std::vector<std::vector<BoostEdge>> embedding(n);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityResult out;
  out.planar = planar;
  if (planar) {
    RotationSystem rot;
    rot.order.resize(n);
    for (Vertex v = 0; v < n; ++v)
      for (const BoostEdge& e : embedding[v]) {
        const Vertex s = boost::source(e, bg), t = boost::target(e, bg);
        rot.order[v].push_back(s == v ? t : s);
      }
    out.certificate = std::move(rot);
    return out;
  }
  std::vector<Edge> edges;
  for (const BoostEdge& e : kuratowski) edges.emplace_back(boost::source(e, bg), boost::target(e, bg));
  if (auto w = witness_from_kuratowski(g, edges)) {
    out.certificate = std::move(*w);
    return out;
  }
  // The reported subgraph is not always minimal.
  if (planar_edges(n, edges)) edges = g.edges();
  if (auto w = witness_from_kuratowski(g, minimize_nonplanar(n, std::move(edges)))) {
    out.certificate = std::move(*w);
    return out;
  }
  // Fall back to a direct search if the subgraph could not be read as a subdivision.
  for (TargetGraph t : {TargetGraph{Kmn{3, 3}}, TargetGraph{Kn{5}}}) {
    auto r = find_subdivision(g, t, 100'000'000);
    if (r.witness) {
      out.certificate = std::move(*r.witness);
      return out;
    }
  }
  throw std::logic_error("non-planar graph without a recoverable Kuratowski witness");
}

std::string planarity_certificate_defect(const Graph& g, const PlanarityResult& r) {
  if (r.planar) {
    const auto* rot = std::get_if<RotationSystem>(&r.certificate);
    if (!rot) return "planar verdict without a rotation system";
    try {
      const EmbeddingResult e = trace_faces(g, *rot);
      if (e.genus != 0) return "rotation system has genus " + std::to_string(e.genus);
    } catch (const Error& err) {
      return err.what();
    }
    return {};
  }
  const auto* w = std::get_if<SubdivisionWitness>(&r.certificate);
  if (!w) return "non-planar verdict without a witness";
  const bool kind_ok = std::holds_alternative<Kn>(w->target)
                           ? std::get<Kn>(w->target).n == 5
                           : std::get<Kmn>(w->target).m == 3 && std::get<Kmn>(w->target).n == 3;
  if (!kind_ok) return "witness is not K5 or K3,3";
  return witness_defect(g, *w);
}

}  // namespace annigraph
