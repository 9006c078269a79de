#include <algorithm>
#include <functional>

#include "annigraph/error.hpp"
#include "annigraph/topology.hpp"

namespace annigraph {

EmbeddingResult trace_faces(const Graph& g, const RotationSystem& rot) {
  const std::size_t n = g.num_vertices();
  if (rot.order.size() != n) {
    throw Error(ErrorKind::InvalidRotation, "rotation covers " + std::to_string(rot.order.size()) +
                                                " vertices, graph has " + std::to_string(n));
  }
  // pos[v] holds (neighbour, index in rot[v]) sorted by neighbour.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> pos(n);
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rot.order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) {
      throw Error(ErrorKind::InvalidRotation,
                  "rotation at vertex " + g.label(v) + " is not a permutation of its neighbours");
    }
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) pos[v].emplace_back(rot.order[v][i], i);
    std::sort(pos[v].begin(), pos[v].end());
    offset[v + 1] = offset[v] + rot.order[v].size();
  }
  auto index_of = [&](Vertex v, Vertex w) {
    auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::make_pair(w, std::size_t{0}));
    return it->second;
  };

  std::vector<char> seen(offset[n], 0);
  std::size_t faces = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (rot.order[u].empty()) {
      ++faces;
      continue;
    }
    for (std::size_t i = 0; i < rot.order[u].size(); ++i) {
      if (seen[offset[u] + i]) continue;
      ++faces;
      Vertex a = u;
      std::size_t k = i;
      while (!seen[offset[a] + k]) {
        seen[offset[a] + k] = 1;
        const Vertex b = rot.order[a][k];
        const std::size_t j = index_of(b, a);
        k = (j + 1) % rot.order[b].size();
        a = b;
      }
    }
  }
  const std::size_t components = connected_components(g).size();
  const long long twice = 2LL * static_cast<long long>(components) - static_cast<long long>(n) +
                          static_cast<long long>(g.num_edges()) - static_cast<long long>(faces);
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::InvalidRotation, "face count inconsistent with Euler's formula");
  }
  return EmbeddingResult{static_cast<std::size_t>(twice / 2), rot, faces};
}

std::string to_string(const TargetGraph& t) {
  if (const auto* k = std::get_if<Kn>(&t)) return "K" + std::to_string(k->n);
  const auto& b = std::get<Kmn>(t);
  return "K" + std::to_string(b.m) + "," + std::to_string(b.n);
}

Graph target_graph(const TargetGraph& t) {
  if (const auto* k = std::get_if<Kn>(&t)) return Graph::complete(k->n);
  const auto& b = std::get<Kmn>(t);
  return Graph::complete_bipartite(b.m, b.n);
}

std::size_t closed_form_genus(const TargetGraph& t) {
  if (const auto* k = std::get_if<Kn>(&t)) {
    if (k->n < 3) return 0;
    const std::size_t num = (k->n - 3) * (k->n - 4);
    return k->n == 3 ? 0 : (num + 11) / 12;
  }
  const auto& b = std::get<Kmn>(t);
  if (b.m < 2 || b.n < 2) return 0;
  return ((b.m - 2) * (b.n - 2) + 3) / 4;
}

std::size_t genus_lower_bound(const Graph& g) {
  const auto stats = graph_stats(g);
  if (!stats.girth) return 0;
  const long long girth = static_cast<long long>(*stats.girth);
  long long total = 0;
  for (const auto& comp : stats.components) {
    const Graph c = g.induced(comp);
    const long long v = static_cast<long long>(c.num_vertices());
    const long long e = static_cast<long long>(c.num_edges());
    if (e < v) continue;  // a tree has no face-length bound and genus 0
    // ceil((E(1 - 2/girth) - V + 2) / 2) = ceil((E(girth-2) - girth(V-2)) / (2 girth)).
    // The whole-graph girth is a valid (possibly weaker) face-length bound for each component.
    const long long num = e * (girth - 2) - girth * (v - 2);
    if (num > 0) total += (num + 2 * girth - 1) / (2 * girth);
  }
  return static_cast<std::size_t>(total);
}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> frames{{root, root, 0}};
    disc[root] = low[root] = ++timer;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (!disc[w]) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      frames.pop_back();
      if (frames.empty()) break;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Edge> block;
        for (;;) {
          Edge e = stack.back();
          stack.pop_back();
          if (e.first > e.second) std::swap(e.first, e.second);
          block.push_back(e);
          if ((e.first == std::min(p, v) && e.second == std::max(p, v))) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace annigraph
