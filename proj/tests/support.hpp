#pragma once

// Shared generators and brute-force oracles. Nothing here calls into the
// library code under test except to build inputs.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "annigraph/graph.hpp"

namespace testsupport {

using annigraph::Edge;
using annigraph::Graph;
using annigraph::Vertex;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2024);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline Graph random_graph(std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng())) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.num_vertices(), edges);
}

// Disjoint union with vertex shift; used to check genus additivity.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.num_vertices(), v + a.num_vertices());
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

// Ringel-Youngs and Ringel closed forms, written out independently.
inline std::size_t kn_genus(std::size_t n) { return n < 5 ? 0 : ((n - 3) * (n - 4) + 11) / 12; }
inline std::size_t kmn_genus(std::size_t m, std::size_t n) {
  return (m < 2 || n < 2) ? 0 : ((m - 2) * (n - 2) + 3) / 4;
}

// AG(Z_n) straight from the definition on integers: x ~ y iff ann(xy) differs
// from ann(x) u ann(y), vertices the nonzero zero-divisors in increasing order.
inline std::vector<std::pair<long, long>> ag_zn_edges(long n) {
  auto ann = [n](long x) {
    std::set<long> s;
    for (long r = 0; r < n; ++r)
      if (r * x % n == 0) s.insert(r);
    return s;
  };
  std::vector<long> zd;
  for (long x = 1; x < n; ++x)
    if (std::gcd(x, n) > 1) zd.push_back(x);
  std::vector<std::pair<long, long>> out;
  for (std::size_t i = 0; i < zd.size(); ++i)
    for (std::size_t j = i + 1; j < zd.size(); ++j) {
      const long x = zd[i], y = zd[j];
      std::set<long> u = ann(x);
      const auto ay = ann(y);
      u.insert(ay.begin(), ay.end());
      if (ann(x * y % n) != u) out.emplace_back(x, y);
    }
  return out;
}

inline std::set<std::pair<std::string, std::string>> labelled_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    auto a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

// Figure of AG(Z2 x Z2 x Z3) drawn on the torus (a rectangle with opposite
// sides identified). For each vertex: neighbour and the direction in which
// the edge leaves the vertex in the drawing, read off the picture commands.
struct FigureArc {
  const char* to;
  int dx, dy;
};
struct FigureVertex {
  const char* label;
  std::vector<FigureArc> arcs;
};

inline const std::vector<FigureVertex>& torus_figure() {
  static const std::vector<FigureVertex> fig = {
      {"(1,1,0)", {{"(0,0,1)", 1, 0}, {"(0,0,2)", 2, -1}, {"(0,1,1)", 2, -3}, {"(1,0,1)", -2, -3},
                   {"(0,1,2)", -1, 2}, {"(1,0,2)", 1, 2}}},
      {"(0,0,1)", {{"(1,1,0)", -1, 0}, {"(0,1,0)", 1, 0}, {"(1,0,0)", 0, 1}}},
      {"(0,0,2)", {{"(1,1,0)", -2, 1}, {"(0,1,0)", 1, 0}, {"(1,0,0)", 0, -1}}},
      {"(1,0,0)", {{"(0,1,1)", -2, 1}, {"(0,0,2)", 0, 1}, {"(0,1,0)", 3, -1}, {"(0,1,2)", 5, -3}, {"(0,0,1)", 0, -1}}},
      {"(0,1,1)", {{"(1,1,0)", -2, 3}, {"(1,0,1)", -1, 0}, {"(1,0,0)", 2, -1}, {"(1,0,2)", 0, -1}}},
      {"(1,0,1)", {{"(0,1,1)", 1, 0}, {"(1,1,0)", 2, 3}, {"(0,1,2)", -3, 5}, {"(0,1,0)", -1, 0}}},
      {"(0,1,2)", {{"(1,0,2)", 1, 0}, {"(1,0,0)", -4, -1}, {"(1,0,1)", -4, -5}, {"(1,1,0)", 0, -1}}},
      {"(1,0,2)", {{"(0,1,1)", 0, 1}, {"(0,1,2)", -1, 0}, {"(0,1,0)", -3, 2}, {"(1,1,0)", 0, -1}}},
      {"(0,1,0)", {{"(1,0,2)", 3, -2}, {"(1,0,0)", -5, -3}, {"(0,0,1)", -5, 2}, {"(0,0,2)", -1, 0}, {"(1,0,1)", 1, 0}}},
  };
  return fig;
}

inline std::set<std::pair<std::string, std::string>> torus_figure_edges() {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& v : torus_figure())
    for (const auto& a : v.arcs) {
      std::string x = v.label, y = a.to;
      if (y < x) std::swap(x, y);
      out.emplace(x, y);
    }
  return out;
}

}  // namespace testsupport
