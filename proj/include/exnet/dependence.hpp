#pragma once

// Conditional independence between dyads, global Markov verification against
// undirected and bidirected dependence graphs, and dependence skeletons.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "exnet/dependence_graph.hpp"
#include "exnet/mobius.hpp"

namespace exnet {

inline constexpr double kCiTolerance = 1e-10;
inline constexpr int kMaxMarkovDyads = 6;

enum class CliqueShape { star, triangle, other };

struct DyadClique {
  DyadMask dyads = 0;
  CliqueShape shape = CliqueShape::other;
  int hub = -1;  // common node of a star clique, 0-based
};

/// Every non-empty clique of the incidence graph L(n), classified.
std::vector<DyadClique> incidence_cliques(int n);

/// All non-empty connected vertex sets. At most 15 vertices.
std::vector<DyadMask> connected_sets(const DependenceGraph& dep);

enum class SkeletonClass { empty, incidence, kneser, complete, other };
std::string to_string(SkeletonClass c);
SkeletonClass classify_skeleton(const DependenceGraph& sk);

struct CiStatement {
  DyadMask a = 0;
  DyadMask b = 0;
  DyadMask s = 0;
};

struct MarkovCheck {
  bool holds = true;
  std::optional<CiStatement> counterexample;
  std::size_t statements_checked = 0;
};

template <class T>
struct DissociationCheck {
  bool ok = true;
  std::optional<DyadMask> violating_set;
  T lhs{};
  T rhs{};
};

namespace detail {

// Index of the configuration x restricted to `vars`, packing the bits of
// `vars` in increasing order.
inline std::size_t compress(DyadMask x, DyadMask vars) {
  std::size_t out = 0;
  int k = 0;
  for (DyadMask m = vars; m != 0; m &= m - 1, ++k)
    if ((x >> std::countr_zero(m)) & 1U) out |= std::size_t{1} << k;
  return out;
}

inline DyadMask expand(std::size_t packed, DyadMask vars) {
  DyadMask out = 0;
  int k = 0;
  for (DyadMask m = vars; m != 0; m &= m - 1, ++k)
    if ((packed >> k) & 1U) out |= DyadMask{1} << std::countr_zero(m);
  return out;
}

template <class T>
std::vector<T> marginal(const JointTable<T>& jt, DyadMask vars) {
  std::vector<T> table(std::size_t{1} << std::popcount(vars), T(0));
  for (std::size_t x = 0; x < jt.probs.size(); ++x) table[compress(static_cast<DyadMask>(x), vars)] += jt.probs[x];
  return table;
}

inline bool factorizes(const Rational& lhs, const Rational& rhs, double) { return lhs == rhs; }
inline bool factorizes(double lhs, double rhs, double tol) {
  return std::abs(lhs - rhs) <= tol * std::max(std::abs(lhs), std::abs(rhs)) + 1e-300;
}

}  // namespace detail

/// A _||_ B | S: P(a,b,s) P(s) = P(a,s) P(b,s) for every configuration.
/// Exact for rationals; relative tolerance `tol` for doubles.
template <class T>
bool ci_test(const JointTable<T>& jt, DyadMask a, DyadMask b, DyadMask s, double tol = kCiTolerance) {
  if (a == 0 || b == 0) throw std::invalid_argument("conditional independence needs non-empty A and B");
  if ((a & b) || (a & s) || (b & s)) throw std::invalid_argument("A, B and S must be disjoint");
  const DyadMask vars = a | b | s;
  const std::vector<T> p_abs = detail::marginal(jt, vars);
  std::vector<T> p_as(std::size_t{1} << std::popcount(a | s), T(0));
  std::vector<T> p_bs(std::size_t{1} << std::popcount(b | s), T(0));
  std::vector<T> p_s(std::size_t{1} << std::popcount(s), T(0));
  for (std::size_t packed = 0; packed < p_abs.size(); ++packed) {
    const DyadMask x = detail::expand(packed, vars);
    p_as[detail::compress(x, a | s)] += p_abs[packed];
    p_bs[detail::compress(x, b | s)] += p_abs[packed];
    p_s[detail::compress(x, s)] += p_abs[packed];
  }
  for (std::size_t packed = 0; packed < p_abs.size(); ++packed) {
    const DyadMask x = detail::expand(packed, vars);
    const T lhs = p_abs[packed] * p_s[detail::compress(x, s)];
    const T rhs = p_as[detail::compress(x, a | s)] * p_bs[detail::compress(x, b | s)];
    if (!detail::factorizes(lhs, rhs, tol)) return false;
  }
  return true;
}

/// Separation in the dependence graph: vertex deletion of S for undirected
/// graphs; restriction to A u B u S for bidirected graphs.
bool separated(const DependenceGraph& dep, DyadMask a, DyadMask b, DyadMask s);

/// Checks every conditional independence implied by separation in `dep`.
template <class T>
MarkovCheck global_markov_check(const JointTable<T>& jt, const DependenceGraph& dep, double tol = kCiTolerance) {
  const int m = dyad_count(jt.n);
  if (m > kMaxMarkovDyads) throw SizeCapExceeded("global Markov verification supports at most 6 dyads (n <= 4)");
  if (dep.n != jt.n) throw std::invalid_argument("dependence graph and joint table have different node counts");
  MarkovCheck result;
  std::vector<int> role(static_cast<std::size_t>(m), 0);  // 0 none, 1 A, 2 B, 3 S
  std::size_t total = 1;
  for (int d = 0; d < m; ++d) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    DyadMask a = 0, b = 0, s = 0;
    std::size_t c = code;
    for (int d = 0; d < m; ++d, c /= 4) {
      const DyadMask bit = DyadMask{1} << d;
      switch (c % 4) {
        case 1: a |= bit; break;
        case 2: b |= bit; break;
        case 3: s |= bit; break;
        default: break;
      }
    }
    // Each unordered {A, B} once.
    if (a == 0 || b == 0 || std::countr_zero(a) > std::countr_zero(b)) continue;
    if (!separated(dep, a, b, s)) continue;
    ++result.statements_checked;
    if (!ci_test(jt, a, b, s, tol)) {
      result.holds = false;
      result.counterexample = CiStatement{a, b, s};
      return result;
    }
  }
  return result;
}

/// u and v are non-adjacent iff u _||_ v | S for some S among the other dyads.
template <class T>
DependenceGraph skeleton(const JointTable<T>& jt, double tol = kCiTolerance) {
  const int m = dyad_count(jt.n);
  if (m > kMaxMarkovDyads) throw SizeCapExceeded("skeleton search supports at most 6 dyads (n <= 4)");
  DependenceGraph sk = DependenceGraph::empty(jt.n, EdgeKind::undirected);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      const DyadMask rest = full_mask(jt.n) & ~((DyadMask{1} << u) | (DyadMask{1} << v));
      bool independent = false;
      DyadMask s = 0;
      do {
        independent = ci_test(jt, DyadMask{1} << u, DyadMask{1} << v, s, tol);
        s = (s - rest) & rest;
      } while (!independent && s != 0);
      if (!independent) sk.add_edge(u, v);
    }
  return sk;
}

/// z_B equals the product of z over the connected components of B, for all B.
template <class T>
DissociationCheck<T> dissociated_check(const LabeledMobius<T>& lm, double tol = kValidationTolerance) {
  DissociationCheck<T> result;
  for (std::size_t b = 1; b < lm.z.size(); ++b) {
    const auto parts = dyad_components(static_cast<DyadMask>(b));
    if (parts.size() < 2) continue;
    T product(1);
    for (DyadMask c : parts) product *= lm.z[c];
    if (!approx_equal(lm.z[b], product, tol)) {
      result.ok = false;
      result.violating_set = static_cast<DyadMask>(b);
      result.lhs = lm.z[b];
      result.rhs = product;
      return result;
    }
  }
  return result;
}

/// Class-indexed version: z_U equals the product over U's component classes.
template <class T>
DissociationCheck<T> dissociated_check(const MobiusVector<T>& mv, double tol = kValidationTolerance) {
  DissociationCheck<T> result;
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  for (std::size_t u = 1; u < cat.size(); ++u) {
    const auto& parts = cat.component_classes(u);
    if (parts.size() < 2) continue;
    T product(1);
    for (std::size_t c : parts) product *= mv.z[c];
    if (!approx_equal(mv.z[u], product, tol)) {
      result.ok = false;
      result.violating_set = cat[u].canon.bits;
      result.lhs = mv.z[u];
      result.rhs = product;
      return result;
    }
  }
  return result;
}

}  // namespace exnet
