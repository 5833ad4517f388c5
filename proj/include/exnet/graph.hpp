#pragma once

// Simple labeled networks on at most eight nodes, stored as dyad bitmasks.
//
// Dyads are indexed in colexicographic order: (0,1), (0,2), (1,2), (0,3), ...
// so dyad {i,j} with i < j has index j(j-1)/2 + i. With this order the dyads
// among the first k nodes occupy the first k(k-1)/2 bits, which means a
// network on k nodes keeps the same mask when padded with isolated nodes.

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exnet {

inline constexpr int kMaxNodes = 8;

using DyadMask = std::uint32_t;
using VertexMask = std::uint32_t;

constexpr int dyad_count(int n) { return n * (n - 1) / 2; }
constexpr int dyad_index(int i, int j) { return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j; }
constexpr DyadMask full_mask(int n) {
  return dyad_count(n) >= 32 ? ~DyadMask{0} : (DyadMask{1} << dyad_count(n)) - 1;
}

struct Dyad {
  int i;  // 0-based, i < j
  int j;
};

Dyad dyad_at(int index);

/// "i-j" with 1-based node labels.
std::string dyad_label(int index);
int parse_dyad_label(std::string_view label);

/// Nodes covered by the dyads of `mask`.
VertexMask dyad_support(DyadMask mask);

/// Splits a dyad set into its node-connected components (ordered by lowest dyad).
std::vector<DyadMask> dyad_components(DyadMask mask);

class LabeledNetwork {
 public:
  LabeledNetwork() = default;
  explicit LabeledNetwork(int n, DyadMask mask = 0);

  /// Edges given as 1-based node pairs; duplicates collapse, loops are rejected.
  static LabeledNetwork from_edges(int n, std::span<const std::pair<int, int>> edges);
  static LabeledNetwork complete(int n);
  static LabeledNetwork star(int k);  // hub 0 with k leaves, on k + 1 nodes
  static LabeledNetwork path(int vertices);
  static LabeledNetwork cycle(int vertices);

  int n() const { return n_; }
  DyadMask mask() const { return mask_; }
  int edge_count() const { return std::popcount(mask_); }
  bool has_edge(int i, int j) const { return (mask_ >> dyad_index(i, j)) & 1U; }

  std::vector<std::pair<int, int>> edges() const;  // 0-based, colex order
  std::vector<int> degrees() const;
  VertexMask support() const { return dyad_support(mask_); }
  int support_size() const { return std::popcount(support()); }

  /// Node v is relabeled to perm[v].
  LabeledNetwork permuted(std::span<const int> perm) const;
  /// Drops isolated nodes, keeping the relative order of the others.
  LabeledNetwork restricted_to_support() const;
  /// Same edges on `n` >= n() nodes.
  LabeledNetwork padded(int n) const;
  bool contains(const LabeledNetwork& other) const { return (other.mask_ & ~mask_) == 0; }

  friend bool operator==(const LabeledNetwork&, const LabeledNetwork&) = default;

 private:
  int n_ = 0;
  DyadMask mask_ = 0;
};

/// Lexicographically minimal adjacency bitstring over all vertex permutations.
/// Position d of the string is dyad d in colex order.
struct CanonicalForm {
  int n_vertices = 0;
  DyadMask bits = 0;

  std::string bitstring() const;
  LabeledNetwork representative() const { return LabeledNetwork(n_vertices > 0 ? n_vertices : 1, bits); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographic comparison of two bitstrings of the same length stored as masks.
bool lex_less(DyadMask a, DyadMask b);

/// Isomorphism class of an edge-induced subgraph, identified by the canonical
/// form of its non-isolated part. The empty graph is the class with no edges.
struct UnlabeledClass {
  CanonicalForm canon;

  bool is_empty() const { return canon.bits == 0; }
  int vertex_count() const { return canon.n_vertices; }
  int edge_count() const { return std::popcount(canon.bits); }
  LabeledNetwork representative() const { return canon.representative(); }
  /// Sorted "i-j" pairs joined by commas, or "EMPTY".
  std::string key() const;

  friend bool operator==(const UnlabeledClass&, const UnlabeledClass&) = default;
};

/// Edge count first, then canonical bits padded with isolated nodes.
bool class_order_less(const UnlabeledClass& a, const UnlabeledClass& b);

struct DegreeDistribution {
  std::vector<int> counts;  // counts[j] = number of nodes of degree j

  int node_count() const;
  int degree_sum() const;
  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
  friend auto operator<=>(const DegreeDistribution&, const DegreeDistribution&) = default;
};

CanonicalForm canonical_form(const LabeledNetwork& g);
UnlabeledClass class_of(const LabeledNetwork& g);
UnlabeledClass parse_class_key(std::string_view key);

std::uint64_t aut_count(const LabeledNetwork& g);

/// All classes of graphs without isolated nodes on at most n nodes, in class
/// order. 1 <= n <= 8.
std::vector<UnlabeledClass> enumerate_classes(int n, bool include_empty);

DegreeDistribution degree_distribution(const LabeledNetwork& g);

/// Components of the non-isolated nodes, each sorted, ordered by smallest node.
std::vector<std::vector<int>> connected_components(const LabeledNetwork& g);

std::uint64_t factorial(int n);

/// Calls f(perm) for every permutation of {0..n-1} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f);

/// Edge-list text: `n <nodes>` followed by `i j` lines, 1-based, `#` comments.
LabeledNetwork parse_edge_list(std::string_view text);
LabeledNetwork read_edge_list(const std::string& path);
std::string format_edge_list(const LabeledNetwork& g);

}  // namespace exnet

#include <algorithm>
#include <numeric>

namespace exnet {

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    f(std::span<const int>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace exnet
