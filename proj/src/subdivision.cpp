#include <algorithm>
#include <numeric>

#include "annigraph/topology.hpp"

namespace annigraph {

std::string witness_defect(const Graph& g, const SubdivisionWitness& w) {
  const Graph t = target_graph(w.target);
  const auto target_edges = t.edges();
  const std::size_t n = g.num_vertices();
  if (w.branch.size() != t.num_vertices()) return "wrong number of branch vertices";
  std::vector<int> owner(n, -1);  // -2: branch vertex, k >= 0: interior of path k
  for (Vertex b : w.branch) {
    if (b >= n) return "branch vertex out of range";
    if (owner[b] != -1) return "repeated branch vertex";
    owner[b] = -2;
  }
  if (w.paths.size() != target_edges.size()) return "wrong number of paths";
  for (std::size_t k = 0; k < target_edges.size(); ++k) {
    const auto& p = w.paths[k];
    const auto [a, b] = target_edges[k];
    if (p.size() < 2) return "path " + std::to_string(k) + " too short";
    const bool forward = p.front() == w.branch[a] && p.back() == w.branch[b];
    const bool backward = p.front() == w.branch[b] && p.back() == w.branch[a];
    if (!forward && !backward) return "path " + std::to_string(k) + " has wrong endpoints";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] >= n || p[i + 1] >= n || !g.adjacent(p[i], p[i + 1])) {
        return "path " + std::to_string(k) + " uses a non-edge";
      }
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (owner[p[i]] != -1) return "path " + std::to_string(k) + " is not internally disjoint";
      owner[p[i]] = static_cast<int>(k);
    }
  }
  return {};
}

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, const TargetGraph& target, std::uint64_t node_limit,
                    const std::vector<Vertex>& candidates)
      : g_(g), target_(target), t_(target_graph(target)), limit_(node_limit) {
    const std::size_t n = g.num_vertices();
    std::vector<char> allowed(n, candidates.empty() ? 1 : 0);
    for (Vertex v : candidates)
      if (v < n) allowed[v] = 1;
    for (Vertex v = 0; v < n; ++v)
      if (allowed[v]) pool_.push_back(v);
    target_edges_ = t_.edges();
    used_.assign(n, 0);
  }

  SubdivisionResult run() {
    SubdivisionResult out;
    if (t_.num_edges() > g_.num_edges() || t_.num_vertices() > g_.num_vertices()) return out;
    branch_.assign(t_.num_vertices(), 0);
    paths_.assign(target_edges_.size(), {});
    // Iterative deepening on path length keeps dense graphs from drowning in long detours.
    SearchStatus st = SearchStatus::None;
    const std::size_t longest = g_.num_vertices() - t_.num_vertices();
    for (cap_ = 0; cap_ <= longest && st == SearchStatus::None; ++cap_) st = assign(0, 0);
    out.status = st;
    out.nodes = nodes_;
    if (st == SearchStatus::Found) out.witness = SubdivisionWitness{target_, branch_, paths_};
    return out;
  }

 private:
  // Target vertices i and j are interchangeable within a part; branch images increase there.
  bool same_part_as_previous(std::size_t i) const {
    if (i == 0) return false;
    if (const auto* b = std::get_if<Kmn>(&target_)) return i != b->m;
    return true;
  }

  SearchStatus assign(std::size_t i, std::size_t from) {
    if (i == branch_.size()) return route_all();
    if (!same_part_as_previous(i)) from = 0;
    const std::size_t need = t_.degree(i);
    for (std::size_t p = from; p < pool_.size(); ++p) {
      const Vertex v = pool_[p];
      if (used_[v] || g_.degree(v) < need) continue;
      if (++nodes_ > limit_) return SearchStatus::Exhausted;
      used_[v] = 1;
      branch_[i] = v;
      const SearchStatus st = assign(i + 1, p + 1);
      used_[v] = 0;
      if (st != SearchStatus::None) return st;
    }
    return SearchStatus::None;
  }

  SearchStatus route_all() {
    // Edges realizable directly come first; they never block anything.
    order_.resize(target_edges_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_partition(order_.begin(), order_.end(), [&](std::size_t k) {
      return g_.adjacent(branch_[target_edges_[k].first], branch_[target_edges_[k].second]);
    });
    return route(0);
  }

  SearchStatus route(std::size_t idx) {
    if (idx == order_.size()) return SearchStatus::Found;
    const std::size_t k = order_[idx];
    const Vertex a = branch_[target_edges_[k].first];
    const Vertex b = branch_[target_edges_[k].second];
    paths_[k] = {a};
    return extend(idx, k, a, b);
  }

  SearchStatus extend(std::size_t idx, std::size_t k, Vertex at, Vertex goal) {
    if (++nodes_ > limit_) return SearchStatus::Exhausted;
    if (g_.adjacent(at, goal)) {
      paths_[k].push_back(goal);
      const SearchStatus st = route(idx + 1);
      if (st != SearchStatus::None) return st;
      paths_[k].pop_back();
    }
    if (paths_[k].size() > cap_) return SearchStatus::None;
    for (Vertex w : g_.neighbors(at)) {
      if (used_[w]) continue;
      used_[w] = 1;
      paths_[k].push_back(w);
      const SearchStatus st = extend(idx, k, w, goal);
      if (st != SearchStatus::None) return st;
      paths_[k].pop_back();
      used_[w] = 0;
    }
    return SearchStatus::None;
  }

  const Graph& g_;
  TargetGraph target_;
  Graph t_;
  std::uint64_t limit_;
  std::size_t cap_ = 0;  // max interior vertices per path
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> pool_;
  std::vector<Edge> target_edges_;
  std::vector<char> used_;
  std::vector<Vertex> branch_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<std::size_t> order_;
};

}  // namespace

SubdivisionResult find_subdivision(const Graph& g, const TargetGraph& target, std::uint64_t node_limit,
                                   const std::vector<Vertex>& branch_candidates) {
  return SubdivisionSearch(g, target, node_limit, branch_candidates).run();
}

}  // namespace annigraph
