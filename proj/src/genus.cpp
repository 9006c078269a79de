#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "annigraph/topology.hpp"

namespace annigraph {

std::string_view to_string(GenusStatus s) {
  switch (s) {
    case GenusStatus::Exact: return "exact";
    case GenusStatus::AboveMax: return "above-max";
    case GenusStatus::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

// Builds an embedding of a connected graph by inserting edges one at a time into
// chosen corners. A closing edge between corners of the same face splits it; between
// different faces it merges them and costs one handle.
class EdgeInsertionSearch {
 public:
  EdgeInsertionSearch(std::size_t n, const std::vector<Edge>& edges, std::uint64_t& nodes,
                      std::uint64_t node_limit)
      : n_(n), nodes_(nodes), node_limit_(node_limit) {
    plan(edges);
    const std::size_t darts = 2 * steps_.size();
    next_.assign(darts, -1);
    prev_.assign(darts, -1);
    face_.assign(darts, -1);
    any_dart_.assign(n_, -1);
    stamp_.assign(2 * darts + 1, 0);
  }

  SearchStatus run(std::size_t target) {
    target_ = target;
    faces_ = merges_ = 0;
    next_face_ = 0;
    log_.clear();
    std::fill(any_dart_.begin(), any_dart_.end(), -1);
    return step(0);
  }

  /// Rotation after a successful run, in local vertex ids.
  std::vector<std::vector<Vertex>> rotation() const {
    std::vector<std::vector<Vertex>> rot(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (any_dart_[v] < 0) continue;
      int d = any_dart_[v];
      do {
        rot[v].push_back(head(d));
        d = next_[d];
      } while (d != any_dart_[v]);
    }
    return rot;
  }

 private:
  struct Step {
    Vertex u;  // present before this step (except for the very first edge)
    Vertex v;
    bool tree;  // v appears for the first time
  };

  Vertex tail(int d) const { return (d & 1) ? steps_[d >> 1].v : steps_[d >> 1].u; }
  Vertex head(int d) const { return (d & 1) ? steps_[d >> 1].u : steps_[d >> 1].v; }
  int phi(int d) const { return next_[d ^ 1]; }

  void plan(const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(n_);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> present(n_, 0);
    std::vector<std::size_t> present_nb(n_, 0);
    std::vector<std::size_t> appear(n_, 0);
    Vertex start = 0;
    for (Vertex v = 1; v < n_; ++v)
      if (adj[v].size() > adj[start].size()) start = v;
    auto add_vertex = [&](Vertex v, std::size_t when) {
      present[v] = 1;
      appear[v] = when;
      for (Vertex w : adj[v]) ++present_nb[w];
    };
    add_vertex(start, 0);
    for (std::size_t added = 1; added < n_; ++added) {
      Vertex best = n_;
      for (Vertex v = 0; v < n_; ++v) {
        if (present[v] || present_nb[v] == 0) continue;
        if (best == n_ || present_nb[v] > present_nb[best] ||
            (present_nb[v] == present_nb[best] && adj[v].size() > adj[best].size())) {
          best = v;
        }
      }
      if (best == n_) throw std::logic_error("edge-insertion search needs a connected graph");
      std::vector<Vertex> anchors;
      for (Vertex w : adj[best])
        if (present[w]) anchors.push_back(w);
      std::sort(anchors.begin(), anchors.end(), [&](Vertex a, Vertex b) {
        return adj[a].size() != adj[b].size() ? adj[a].size() > adj[b].size() : a < b;
      });
      const std::size_t when = steps_.size();
      steps_.push_back({anchors[0], best, true});
      add_vertex(best, when);
      for (std::size_t i = 1; i < anchors.size(); ++i) steps_.push_back({anchors[i], best, false});
    }
    // Mirror symmetry: fix the orientation at the first vertex that reaches degree 3.
    std::vector<std::size_t> deg(n_, 0);
    for (std::size_t k = 0; k < steps_.size() && !mirror_fixed_; ++k) {
      for (Vertex x : {steps_[k].u, steps_[k].v}) {
        if (++deg[x] == 3 && !mirror_fixed_) {
          mirror_fixed_ = true;
          mirror_step_ = k;
          mirror_vertex_ = x;
        }
      }
    }

    // For each step, closing edges still to come whose endpoints are already present.
    pending_.assign(steps_.size(), {});
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      for (std::size_t j = k + 1; j < steps_.size(); ++j) {
        const Step& s = steps_[j];
        if (!s.tree && appear[s.u] <= k && appear[s.v] <= k) pending_[k].push_back(j);
      }
    }
  }

  void link_after(int d, int c, Vertex at) {
    if (c < 0) {
      next_[d] = prev_[d] = d;
      any_dart_[at] = d;
      return;
    }
    const int nx = next_[c];
    next_[c] = d;
    prev_[d] = c;
    next_[d] = nx;
    prev_[nx] = d;
  }

  void unlink(int d, Vertex at) {
    if (next_[d] == d) {
      any_dart_[at] = -1;
    } else {
      next_[prev_[d]] = next_[d];
      prev_[next_[d]] = prev_[d];
      if (any_dart_[at] == d) any_dart_[at] = next_[d];
    }
    next_[d] = prev_[d] = -1;
  }

  void relabel(int d, int f) {
    log_.emplace_back(d, face_[d]);
    face_[d] = f;
  }

  // Inserts step k with darts placed after cu at u and after cv at v (-1: no darts yet).
  void insert(std::size_t k, int cu, int cv) {
    const int e = static_cast<int>(2 * k);
    const int r = e + 1;
    const Step& s = steps_[k];
    if (cu < 0 && cv < 0) {
      link_after(e, -1, s.u);
      link_after(r, -1, s.v);
      face_[e] = face_[r] = next_face_++;
      faces_ = 1;
      return;
    }
    if (cv < 0) {
      const int f = face_[cu ^ 1];
      link_after(e, cu, s.u);
      link_after(r, -1, s.v);
      face_[e] = face_[r] = f;
      return;
    }
    const int f1 = face_[cu ^ 1];
    const int f2 = face_[cv ^ 1];
    link_after(e, cu, s.u);
    link_after(r, cv, s.v);
    if (f1 != f2) {
      face_[e] = face_[r] = f1;
      for (int d = phi(e); d != e; d = phi(d))
        if (face_[d] == f2) relabel(d, f1);
      --faces_;
      ++merges_;
    } else {
      const int nf = next_face_++;
      face_[e] = f1;
      face_[r] = nf;
      for (int d = phi(r); d != r; d = phi(d)) relabel(d, nf);
      ++faces_;
    }
  }

  void undo(std::size_t k, int cu, int cv, std::size_t mark) {
    const int e = static_cast<int>(2 * k);
    const int r = e + 1;
    const Step& s = steps_[k];
    while (log_.size() > mark) {
      face_[log_.back().first] = log_.back().second;
      log_.pop_back();
    }
    unlink(r, s.v);
    unlink(e, s.u);
    face_[e] = face_[r] = -1;
    if (cu < 0 && cv < 0) {
      faces_ = 0;
      --next_face_;
    } else if (cv >= 0) {
      // Closing edge: a merge recorded a handle, a split allocated a face id.
      if (merged_.back()) {
        ++faces_;
        --merges_;
      } else {
        --faces_;
        --next_face_;
      }
    }
  }

  // Every pending closing edge must still find a common face once no merges remain.
  bool pending_edges_feasible(std::size_t k) {
    if (merges_ < target_) return true;
    for (std::size_t j : pending_[k]) {
      const Step& s = steps_[j];
      ++stamp_gen_;
      int d = any_dart_[s.u];
      do {
        stamp_[face_[d ^ 1]] = stamp_gen_;
        d = next_[d];
      } while (d != any_dart_[s.u]);
      bool common = false;
      d = any_dart_[s.v];
      do {
        if (stamp_[face_[d ^ 1]] == stamp_gen_) {
          common = true;
          break;
        }
        d = next_[d];
      } while (d != any_dart_[s.v]);
      if (!common) return false;
    }
    return true;
  }

  std::vector<int> corners(Vertex x, std::size_t k) const {
    std::vector<int> out;
    const int start = any_dart_[x];
    if (start < 0) return {-1};
    int d = start;
    do {
      out.push_back(d);
      d = next_[d];
    } while (d != start);
    // With exactly two darts, the two corners give mirror-image orders; keep one.
    if (mirror_fixed_ && k == mirror_step_ && x == mirror_vertex_ && out.size() == 2) {
      out = {std::max(out[0], out[1])};
    }
    return out;
  }

  SearchStatus step(std::size_t k) {
    if (k == steps_.size()) return SearchStatus::Found;
    if (++nodes_ > node_limit_) return SearchStatus::Exhausted;
    const Step& s = steps_[k];
    const std::vector<int> cus = k == 0 ? std::vector<int>{-1} : corners(s.u, k);
    const std::vector<int> cvs = s.tree ? std::vector<int>{-1} : corners(s.v, k);
    for (int cu : cus) {
      for (int cv : cvs) {
        const bool closing = cu >= 0 && cv >= 0;
        const bool merge = closing && face_[cu ^ 1] != face_[cv ^ 1];
        if (merge && merges_ >= target_) continue;
        const std::size_t mark = log_.size();
        merged_.push_back(merge);
        insert(k, cu, cv);
        SearchStatus st = SearchStatus::None;
        if (pending_edges_feasible(k)) st = step(k + 1);
        if (st == SearchStatus::Found) return st;
        undo(k, cu, cv, mark);
        merged_.pop_back();
        if (st == SearchStatus::Exhausted) return st;
      }
    }
    return SearchStatus::None;
  }

  std::size_t n_;
  std::uint64_t& nodes_;
  std::uint64_t node_limit_;
  std::vector<Step> steps_;
  std::vector<std::vector<std::size_t>> pending_;
  bool mirror_fixed_ = false;
  std::size_t mirror_step_ = 0;
  Vertex mirror_vertex_ = 0;

  std::vector<int> next_, prev_, face_, any_dart_;
  std::vector<std::pair<int, int>> log_;
  std::vector<char> merged_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t stamp_gen_ = 0;
  std::size_t target_ = 0;
  std::size_t faces_ = 0;
  std::size_t merges_ = 0;
  int next_face_ = 0;
};

struct Partial {
  GenusStatus status = GenusStatus::Exact;
  std::size_t genus = 0;
  std::vector<std::vector<Vertex>> rot;  // global ids; empty rows for untouched vertices
};

using Adjacency = std::vector<std::set<Vertex>>;

struct ReductionOp {
  enum Kind { Isolated, Leaf, Smooth, Parallel } kind;
  Vertex w;
  Vertex a = 0;
  Vertex b = 0;
};

class GenusSolver {
 public:
  GenusSolver(const GenusBudget& budget, std::size_t num_vertices)
      : budget_(budget), size_(num_vertices) {}

  std::uint64_t nodes() const { return nodes_; }

  Partial solve(Adjacency adj, bool decompose) {
    std::vector<ReductionOp> log;
    if (decompose) reduce(adj, log);

    std::vector<Vertex> live;
    for (Vertex v = 0; v < adj.size(); ++v)
      if (!adj[v].empty()) live.push_back(v);

    Partial out;
    out.rot.assign(adj.size(), {});
    if (!live.empty()) {
      std::vector<std::size_t> local(adj.size(), 0);
      for (std::size_t i = 0; i < live.size(); ++i) local[live[i]] = i;
      Graph g = Graph::from_edges(live.size(), {});
      for (Vertex v : live)
        for (Vertex w : adj[v])
          if (v < w) g.add_edge(local[v], local[w]);

      std::vector<std::vector<Edge>> parts;
      if (decompose) {
        parts = biconnected_blocks(g);
      } else {
        for (const auto& comp : connected_components(g)) {
          std::vector<Edge> es;
          for (auto [a, b] : g.edges())
            if (std::binary_search(comp.begin(), comp.end(), a)) es.emplace_back(a, b);
          parts.push_back(std::move(es));
        }
      }

      for (const auto& part : parts) {
        Partial p;
        // A lone block is already reduced; split blocks may expose new degree-2 vertices.
        if (decompose && parts.size() > 1 && part.size() > 1) {
          Adjacency sub(adj.size());
          for (auto [a, b] : part) {
            sub[live[a]].insert(live[b]);
            sub[live[b]].insert(live[a]);
          }
          p = solve(std::move(sub), true);
        } else {
          p = search_block(part, live);
        }
        out.genus += p.genus;
        if (p.status == GenusStatus::Exhausted || out.status == GenusStatus::Exhausted) {
          out.status = GenusStatus::Exhausted;
        } else if (p.status == GenusStatus::AboveMax) {
          out.status = GenusStatus::AboveMax;
        }
        for (Vertex v = 0; v < adj.size(); ++v)
          out.rot[v].insert(out.rot[v].end(), p.rot[v].begin(), p.rot[v].end());
      }
      if (out.status == GenusStatus::Exact && out.genus > budget_.max_genus) out.status = GenusStatus::AboveMax;
    }
    if (out.status == GenusStatus::Exact) lift(out.rot, log);
    return out;
  }

 private:
  static void remove_edge(Adjacency& adj, Vertex a, Vertex b) {
    adj[a].erase(b);
    adj[b].erase(a);
  }

  // Drops degree-0/1 vertices, smooths degree-2 vertices, and drops degree-2 vertices whose
  // neighbours are adjacent (a path parallel to an existing edge); none of these change genus.
  static void reduce(Adjacency& adj, std::vector<ReductionOp>& log) {
    std::vector<char> gone(adj.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex w = 0; w < adj.size(); ++w) {
        if (gone[w] || adj[w].size() > 2) continue;
        changed = true;
        gone[w] = 1;
        if (adj[w].empty()) {
          log.push_back({ReductionOp::Isolated, w});
        } else if (adj[w].size() == 1) {
          const Vertex a = *adj[w].begin();
          log.push_back({ReductionOp::Leaf, w, a});
          remove_edge(adj, w, a);
        } else {
          const Vertex a = *adj[w].begin();
          const Vertex b = *std::next(adj[w].begin());
          remove_edge(adj, w, a);
          remove_edge(adj, w, b);
          if (adj[a].count(b)) {
            log.push_back({ReductionOp::Parallel, w, a, b});
          } else {
            log.push_back({ReductionOp::Smooth, w, a, b});
            adj[a].insert(b);
            adj[b].insert(a);
          }
        }
      }
    }
  }

  static void replace(std::vector<Vertex>& cyc, Vertex from, Vertex to) {
    *std::find(cyc.begin(), cyc.end(), from) = to;
  }

  static void lift(std::vector<std::vector<Vertex>>& rot, const std::vector<ReductionOp>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      const ReductionOp& op = *it;
      switch (op.kind) {
        case ReductionOp::Isolated:
          rot[op.w].clear();
          break;
        case ReductionOp::Leaf:
          rot[op.w] = {op.a};
          rot[op.a].push_back(op.w);
          break;
        case ReductionOp::Smooth:
          replace(rot[op.a], op.b, op.w);
          replace(rot[op.b], op.a, op.w);
          rot[op.w] = {op.a, op.b};
          break;
        case ReductionOp::Parallel: {
          // w goes right after b around a and right before a around b, which puts the
          // new path a-w-b alongside edge ab inside one face and splits it.
          auto& ra = rot[op.a];
          ra.insert(std::find(ra.begin(), ra.end(), op.b) + 1, op.w);
          auto& rb = rot[op.b];
          rb.insert(std::find(rb.begin(), rb.end(), op.a), op.w);
          rot[op.w] = {op.a, op.b};
          break;
        }
      }
    }
  }

  Partial search_block(const std::vector<Edge>& part, const std::vector<Vertex>& live) {
    Partial out;
    out.rot.assign(size_, {});
    std::vector<Vertex> verts;
    for (auto [a, b] : part) verts.push_back(a), verts.push_back(b);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::map<Vertex, std::size_t> local;
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = i;
    std::vector<Edge> edges;
    for (auto [a, b] : part) edges.emplace_back(local[a], local[b]);

    const Graph block = Graph::from_edges(verts.size(), edges);
    const std::size_t lb = genus_lower_bound(block);
    if (lb > budget_.max_genus) {
      out.status = GenusStatus::AboveMax;
      out.genus = lb;
      return out;
    }
    EdgeInsertionSearch search(verts.size(), edges, nodes_, budget_.node_limit);
    for (std::size_t g = lb; g <= budget_.max_genus; ++g) {
      const SearchStatus st = search.run(g);
      if (st == SearchStatus::Found) {
        out.genus = g;
        const auto rot = search.rotation();
        for (std::size_t i = 0; i < verts.size(); ++i)
          for (Vertex w : rot[i]) out.rot[live[verts[i]]].push_back(live[verts[w]]);
        return out;
      }
      if (st == SearchStatus::Exhausted) {
        out.status = GenusStatus::Exhausted;
        out.genus = g;
        return out;
      }
    }
    out.status = GenusStatus::AboveMax;
    out.genus = budget_.max_genus + 1;
    return out;
  }

  GenusBudget budget_;
  std::size_t size_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

GenusResult min_genus(const Graph& g, const GenusBudget& budget) {
  GenusSolver solver(budget, g.num_vertices());
  Adjacency adj(g.num_vertices());
  for (auto [a, b] : g.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  Partial p = solver.solve(std::move(adj), budget.decompose);
  GenusResult out;
  out.status = p.status;
  out.genus = p.genus;
  out.nodes = solver.nodes();
  if (p.status == GenusStatus::Exact) {
    out.embedding = trace_faces(g, RotationSystem{std::move(p.rot)});
    if (out.embedding->genus != p.genus) {
      throw std::logic_error("genus search produced an embedding of genus " +
                             std::to_string(out.embedding->genus) + ", expected " + std::to_string(p.genus));
    }
  }
  return out;
}

}  // namespace annigraph
