#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "annigraph/graph.hpp"

namespace annigraph {

/// Cyclic order of neighbours around each vertex.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
};

struct EmbeddingResult {
  std::size_t genus = 0;
  RotationSystem rotation;
  std::size_t faces = 0;
};

/// Face tracing. Disconnected graphs are allowed: each component contributes its own
/// Euler characteristic, and an isolated vertex counts as one face.
EmbeddingResult trace_faces(const Graph& g, const RotationSystem& rot);

struct Kn {
  std::size_t n;
};
struct Kmn {
  std::size_t m;
  std::size_t n;
};
using TargetGraph = std::variant<Kn, Kmn>;

std::string to_string(const TargetGraph& t);
Graph target_graph(const TargetGraph& t);
std::size_t closed_form_genus(const TargetGraph& t);

/// branch[i] is the image of target vertex i (for K_{m,n} the first m form one part);
/// paths[k] realizes the k-th edge of target_graph(target).edges(), endpoints included.
struct SubdivisionWitness {
  TargetGraph target;
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;
};

/// Re-checks a witness against g; returns an empty string when valid, else the first defect.
std::string witness_defect(const Graph& g, const SubdivisionWitness& w);
inline bool validate_witness(const Graph& g, const SubdivisionWitness& w) { return witness_defect(g, w).empty(); }

enum class SearchStatus { Found, None, Exhausted };

struct SubdivisionResult {
  SearchStatus status = SearchStatus::None;
  std::optional<SubdivisionWitness> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a subdivision of the target. `branch_candidates`, when non-empty,
/// restricts which vertices may serve as branch vertices.
SubdivisionResult find_subdivision(const Graph& g, const TargetGraph& target,
                                   std::uint64_t node_limit = 10'000'000,
                                   const std::vector<Vertex>& branch_candidates = {});

struct PlanarityResult {
  bool planar = false;
  std::variant<RotationSystem, SubdivisionWitness> certificate;
};

/// Boyer-Myrvold test (Boost). Planar graphs come with a genus-0 rotation system,
/// non-planar ones with a K5 or K3,3 subdivision witness.
PlanarityResult is_planar(const Graph& g);

/// Re-checks either certificate kind; empty string when it holds.
std::string planarity_certificate_defect(const Graph& g, const PlanarityResult& r);

/// Euler bound with girth, summed over components; forests give 0.
std::size_t genus_lower_bound(const Graph& g);

struct GenusBudget {
  std::size_t max_genus = 3;
  std::uint64_t node_limit = 50'000'000;
  /// Degree-1/2 reduction and block splitting; off means one search over the whole graph.
  bool decompose = true;
};

enum class GenusStatus {
  Exact,      // genus is the minimum; embedding attains it
  AboveMax,   // every embedding has genus > max_genus; genus holds the proven lower bound
  Exhausted,  // node limit hit; genus holds the proven lower bound
};

std::string_view to_string(GenusStatus s);

struct GenusResult {
  GenusStatus status = GenusStatus::Exact;
  std::size_t genus = 0;
  std::optional<EmbeddingResult> embedding;
  std::uint64_t nodes = 0;
};

GenusResult min_genus(const Graph& g, const GenusBudget& budget = {});

/// Biconnected blocks as edge lists (bridges are single-edge blocks).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

}  // namespace annigraph
