#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annigraph/ring.hpp"

namespace annigraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with labelled vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);

  /// Edge list over vertices 0..n-1 with generated labels "0", "1", ...
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
  static Graph complete(std::size_t n);
  static Graph complete_bipartite(std::size_t m, std::size_t n);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * labels_.size() + v] != 0; }
  /// Neighbours in increasing index order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph induced(const std::vector<Vertex>& vertices) const;
  Graph complement() const;

  /// Ring elements backing each vertex, when the graph came from a ring.
  const std::vector<Elem>& elements() const { return elements_; }
  void set_elements(std::vector<Elem> elements) { elements_ = std::move(elements); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  std::vector<Elem> elements_;
  std::size_t num_edges_ = 0;
};

/// AG(R): vertices Z(R)*, edge iff ann(xy) != ann(x) u ann(y).
Graph annihilator_graph(const Ring& ring);

/// Classical zero-divisor graph: vertices Z(R)*, edge iff xy = 0.
Graph zero_divisor_graph(const Ring& ring);

struct EdgeCriteria {
  bool def_edge;
  bool ideal_edge;
  bool module_edge;
};

/// Three independent evaluations of adjacency in AG(R) for ring elements x, y.
EdgeCriteria edge_criteria(const Ring& ring, Elem x, Elem y);

struct ShapeReport {
  bool complete = false;
  /// Set when the graph is complete bipartite; smaller part first.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
  /// Vertex sets of the complement's components when there are at least two.
  std::vector<std::vector<Vertex>> join_parts;
  /// Compact descriptor such as "K6", "K3,3", "E3 v (K3 + E3)".
  std::string descriptor;
};

ShapeReport recognize_shape(const Graph& g);

/// Descriptor only; see ShapeReport::descriptor.
std::string describe_shape(const Graph& g);

struct GraphStats {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degree_sequence;  // non-increasing
  std::optional<std::size_t> girth;          // empty for forests
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> diameters;  // aligned with components
};

GraphStats graph_stats(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace annigraph
