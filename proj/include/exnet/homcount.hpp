#pragma once

// Injective homomorphism and subgraph counts. Pattern graphs are always taken
// on their non-isolated nodes, so inj(F, G) does not depend on how many
// isolated nodes F carries.

#include <cstdint>

#include "exnet/graph.hpp"
#include "exnet/rational.hpp"

namespace exnet {

/// Injective maps V(F) -> V(G) sending edges to edges, where V(F) is the set
/// of non-isolated nodes of the pattern. Returns 0 when F has more such nodes
/// than G has nodes; the empty pattern gives 1.
std::uint64_t inj(const LabeledNetwork& pattern, const LabeledNetwork& target);

/// Subgraphs of `target` isomorphic to `pattern`: inj(F, G) / aut(F).
std::uint64_t sub(const LabeledNetwork& pattern, const LabeledNetwork& target);

/// inj(F, G) divided by the number of injective maps V(F) -> V(G).
Rational t_inj(const LabeledNetwork& pattern, const LabeledNetwork& target);

/// sigma_U(x): members of [U] on x's node set that are subgraphs of x.
std::uint64_t sigma(const UnlabeledClass& u, const LabeledNetwork& x);

/// r_U(x): members of [U] on x's node set containing x, by explicit
/// enumeration of the class orbit.
std::uint64_t r_count(const UnlabeledClass& u, const LabeledNetwork& x);

/// Number of k-stars from the degree distribution; k = 1 gives the edge count.
std::uint64_t star_count_from_degrees(const DegreeDistribution& dd, int k);

/// Pairs of disjoint edges: C(|E|, 2) - sigma_{S_2}.
std::uint64_t two_disjoint_edges_from_degrees(const DegreeDistribution& dd);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace exnet
