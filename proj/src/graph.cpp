#include "annigraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>

#include "annigraph/error.hpp"

namespace annigraph {

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      adj_(labels_.size()),
      matrix_(labels_.size() * labels_.size(), 0) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

Graph Graph::complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return from_edges(m + n, edges);
}

void Graph::add_edge(Vertex u, Vertex v) {
  const std::size_t n = labels_.size();
  if (u >= n || v >= n) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (adjacent(u, v)) return;
  matrix_[u * n + v] = matrix_[v * n + u] = 1;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++num_edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < labels_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<std::string> labels;
  for (Vertex v : vertices) labels.push_back(labels_.at(v));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  if (!elements_.empty()) {
    std::vector<Elem> elems;
    for (Vertex v : vertices) elems.push_back(elements_[v]);
    g.set_elements(std::move(elems));
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(labels_);
  for (Vertex u = 0; u < labels_.size(); ++u)
    for (Vertex v = u + 1; v < labels_.size(); ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  g.set_elements(elements_);
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::vector<Elem> nonzero_zero_divisors(const Ring& ring) {
  std::vector<Elem> out;
  for (Elem z : element_classes(ring).zero_divisors)
    if (z != ring.zero()) out.push_back(z);
  if (out.empty()) {
    throw Error(ErrorKind::NoZeroDivisors, "ring " + ring.recipe() + " has no nonzero zero-divisors");
  }
  return out;
}

Graph vertex_graph(const Ring& ring, const std::vector<Elem>& elems) {
  std::vector<std::string> labels;
  for (Elem e : elems) labels.push_back(ring.label(e));
  Graph g(std::move(labels));
  g.set_elements(elems);
  return g;
}

}  // namespace

Graph annihilator_graph(const Ring& ring) {
  const std::vector<Elem> zd = nonzero_zero_divisors(ring);
  const std::size_t n = ring.order();
  const std::size_t words = (n + 63) / 64;
  // ann(a) for every element a, as bitsets; ann(xy) is needed for arbitrary products.
  std::vector<Bits> ann(n, Bits(words, 0));
  for (Elem a = 0; a < n; ++a)
    for (Elem r = 0; r < n; ++r)
      if (ring.mul(a, r) == ring.zero()) ann[a][r / 64] |= std::uint64_t{1} << (r % 64);

  Graph g = vertex_graph(ring, zd);
  for (std::size_t i = 0; i < zd.size(); ++i) {
    const Bits& ax = ann[zd[i]];
    for (std::size_t j = i + 1; j < zd.size(); ++j) {
      const Bits& ay = ann[zd[j]];
      const Bits& axy = ann[ring.mul(zd[i], zd[j])];
      for (std::size_t w = 0; w < words; ++w) {
        if ((ax[w] | ay[w]) != axy[w]) {
          g.add_edge(i, j);
          break;
        }
      }
    }
  }
  return g;
}

Graph zero_divisor_graph(const Ring& ring) {
  const std::vector<Elem> zd = nonzero_zero_divisors(ring);
  Graph g = vertex_graph(ring, zd);
  for (std::size_t i = 0; i < zd.size(); ++i)
    for (std::size_t j = i + 1; j < zd.size(); ++j)
      if (ring.mul(zd[i], zd[j]) == ring.zero()) g.add_edge(i, j);
  return g;
}

EdgeCriteria edge_criteria(const Ring& ring, Elem x, Elem y) {
  const Elem zero = ring.zero();
  const std::size_t n = ring.order();
  auto is_zero_divisor = [&](Elem a) {
    if (a >= n || a == zero) return false;
    for (Elem r = 0; r < n; ++r)
      if (r != zero && ring.mul(a, r) == zero) return true;
    return false;
  };
  if (x == y || !is_zero_divisor(x) || !is_zero_divisor(y)) {
    throw Error(ErrorKind::InvalidVertexPair, "(" + std::to_string(x) + ", " + std::to_string(y) +
                                                  ") is not a pair of distinct nonzero zero-divisors");
  }

  EdgeCriteria out{};

  // Definition, with annihilators as explicit sets.
  {
    const ElementSet ax = annihilator(ring, x);
    const ElementSet ay = annihilator(ring, y);
    const ElementSet axy = annihilator(ring, ring.mul(x, y));
    std::set<Elem> joined(ax.begin(), ax.end());
    joined.insert(ay.begin(), ay.end());
    out.def_edge = joined != std::set<Elem>(axy.begin(), axy.end());
  }

  // Rx meets ann(y) nontrivially, and Ry meets ann(x).
  auto principal = [&](Elem a) {
    std::set<Elem> ideal;
    for (Elem r = 0; r < n; ++r) ideal.insert(ring.mul(r, a));
    return ideal;
  };
  auto meets_nontrivially = [&](const std::set<Elem>& ideal, const ElementSet& ann) {
    for (Elem a : ann)
      if (a != zero && ideal.count(a)) return true;
    return false;
  };
  out.ideal_edge = meets_nontrivially(principal(x), annihilator(ring, y)) &&
                   meets_nontrivially(principal(y), annihilator(ring, x));

  // x kills a nonzero element of Ry, and y kills a nonzero element of Rx.
  auto kills_nonzero_multiple = [&](Elem a, Elem b) {
    for (Elem r = 0; r < n; ++r) {
      const Elem rb = ring.mul(r, b);
      if (rb != zero && ring.mul(a, rb) == zero) return true;
    }
    return false;
  };
  out.module_edge = kills_nonzero_multiple(x, y) && kills_nonzero_multiple(y, x);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) seen[w] = 1, comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

bool is_complete(const Graph& g) {
  const std::size_t n = g.num_vertices();
  return n > 0 && g.num_edges() == n * (n - 1) / 2;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> complete_bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return std::nullopt;
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        return std::nullopt;
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] < 0) return std::nullopt;  // disconnected
    (side[v] == 0 ? a : b).push_back(v);
  }
  if (g.num_edges() != a.size() * b.size()) return std::nullopt;
  if (a.size() > b.size()) std::swap(a, b);
  return std::make_pair(a, b);
}

std::string wrap(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

std::string describe(const Graph& g);

// Components of g, isolated vertices pooled into one "E{k}" term placed last.
std::string describe_union(const Graph& g, const std::vector<std::vector<Vertex>>& comps) {
  std::vector<std::vector<Vertex>> big;
  std::size_t isolated = 0;
  for (const auto& c : comps) {
    if (c.size() == 1) {
      ++isolated;
    } else {
      big.push_back(c);
    }
  }
  std::stable_sort(big.begin(), big.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::string out;
  for (const auto& c : big) out += (out.empty() ? "" : " + ") + wrap(describe(g.induced(c)));
  if (isolated) out += std::string(out.empty() ? "" : " + ") + "E" + std::to_string(isolated);
  return out;
}

// Join of the parts; singleton parts are pooled into one "K{k}" term placed first.
std::string describe_join(const Graph& g, std::vector<std::vector<Vertex>> parts) {
  std::size_t singles = 0;
  std::vector<std::vector<Vertex>> big;
  for (auto& p : parts) {
    if (p.size() == 1) {
      ++singles;
    } else {
      big.push_back(std::move(p));
    }
  }
  std::stable_sort(big.begin(), big.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::string out = singles ? "K" + std::to_string(singles) : "";
  for (const auto& p : big) out += (out.empty() ? "" : " v ") + wrap(describe(g.induced(p)));
  return out;
}

std::string describe(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return "K0";
  if (is_complete(g)) return "K" + std::to_string(n);
  if (g.num_edges() == 0) return "E" + std::to_string(n);
  if (auto bp = complete_bipartition(g)) {
    return "K" + std::to_string(bp->first.size()) + "," + std::to_string(bp->second.size());
  }
  const auto comps = connected_components(g);
  if (comps.size() > 1) return describe_union(g, comps);
  const auto co = connected_components(g.complement());
  if (co.size() > 1) return describe_join(g, co);
  return "G" + std::to_string(n) + "," + std::to_string(g.num_edges());
}

}  // namespace

std::string describe_shape(const Graph& g) { return describe(g); }

ShapeReport recognize_shape(const Graph& g) {
  ShapeReport out;
  out.complete = is_complete(g);
  out.bipartition = complete_bipartition(g);
  if (g.num_vertices() >= 2) {
    auto co = connected_components(g.complement());
    if (co.size() > 1) out.join_parts = std::move(co);
  }
  out.descriptor = describe(g);
  return out;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  const std::size_t n = g.num_vertices();
  s.order = n;
  s.size = g.num_edges();
  for (Vertex v = 0; v < n; ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
  s.components = connected_components(g);

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t girth = kInf;
  std::vector<std::size_t> ecc(n, 0);
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      ecc[root] = std::max(ecc[root], dist[u]);
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (girth != kInf) s.girth = girth;
  for (const auto& c : s.components) {
    std::size_t d = 0;
    for (Vertex v : c) d = std::max(d, ecc[v]);
    s.diameters.push_back(d);
  }
  return s;
}

}  // namespace annigraph
