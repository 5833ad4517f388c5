#pragma once

#include <string>
#include <vector>

#include "exnet/graph.hpp"

namespace exnet {

enum class EdgeKind { undirected, bidirected };

std::string to_string(EdgeKind kind);
EdgeKind parse_edge_kind(const std::string& text);

/// A graph whose vertices are the n(n-1)/2 dyads of a node set. Vertex sets
/// are dyad masks.
struct DependenceGraph {
  int n = 0;
  EdgeKind kind = EdgeKind::undirected;
  std::vector<DyadMask> adjacency;  // adjacency[d] = neighbours of dyad d

  static DependenceGraph empty(int n, EdgeKind kind);
  static DependenceGraph complete(int n, EdgeKind kind);

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  int edge_count() const;
  int degree(int d) const { return std::popcount(adjacency[static_cast<std::size_t>(d)]); }
  bool adjacent(int u, int v) const { return (adjacency[static_cast<std::size_t>(u)] >> v) & 1U; }
  void add_edge(int u, int v);
  DependenceGraph complement() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Connected components of the subgraph induced by `vertices`.
  std::vector<DyadMask> components(DyadMask vertices) const;
  /// Vertices reachable from `from` inside `allowed`.
  DyadMask reachable(DyadMask from, DyadMask allowed) const;

  friend bool operator==(const DependenceGraph&, const DependenceGraph&) = default;
};

/// Dyads adjacent iff they share a node (the line graph of K_n).
DependenceGraph incidence_graph(int n, EdgeKind kind);
/// Dyads adjacent iff disjoint (Kneser graph KG(n,2)).
DependenceGraph kneser_graph(int n, EdgeKind kind);

}  // namespace exnet
