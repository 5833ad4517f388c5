#include "exnet/homcount.hpp"

#include <array>
#include <cassert>
#include <set>

namespace exnet {

namespace {

struct Adjacency {
  int n = 0;
  std::array<VertexMask, kMaxNodes> rows{};

  explicit Adjacency(const LabeledNetwork& g) : n(g.n()) {
    for (auto [i, j] : g.edges()) {
      rows[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
      rows[static_cast<std::size_t>(j)] |= VertexMask{1} << i;
    }
  }
};

// Pattern vertices are placed in order; each candidate image must be adjacent
// in the target to the images of every earlier pattern neighbour.
std::uint64_t extend(const Adjacency& pattern, const Adjacency& target, int pos, std::array<int, kMaxNodes>& image,
                     VertexMask used) {
  if (pos == pattern.n) return 1;
  std::uint64_t total = 0;
  VertexMask candidates = ((VertexMask{1} << target.n) - 1) & ~used;
  const VertexMask earlier = pattern.rows[static_cast<std::size_t>(pos)] & ((VertexMask{1} << pos) - 1);
  for (VertexMask e = earlier; e != 0; e &= e - 1)
    candidates &= target.rows[static_cast<std::size_t>(image[static_cast<std::size_t>(std::countr_zero(e))])];
  for (; candidates != 0; candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    image[static_cast<std::size_t>(pos)] = v;
    total += extend(pattern, target, pos + 1, image, used | (VertexMask{1} << v));
  }
  return total;
}

std::uint64_t falling(int n, int k) {
  std::uint64_t f = 1;
  for (int i = 0; i < k; ++i) f *= static_cast<std::uint64_t>(n - i);
  return f;
}

}  // namespace

std::uint64_t inj(const LabeledNetwork& pattern, const LabeledNetwork& target) {
  if (pattern.mask() == 0) return 1;
  const LabeledNetwork f = pattern.restricted_to_support();
  if (f.n() > target.n()) return 0;
  std::array<int, kMaxNodes> image{};
  return extend(Adjacency(f), Adjacency(target), 0, image, 0);
}

std::uint64_t sub(const LabeledNetwork& pattern, const LabeledNetwork& target) {
  if (pattern.mask() == 0) return 1;
  const std::uint64_t maps = inj(pattern, target);
  const std::uint64_t aut = aut_count(pattern.restricted_to_support());
  assert(maps % aut == 0);
  return maps / aut;
}

Rational t_inj(const LabeledNetwork& pattern, const LabeledNetwork& target) {
  const int k = pattern.mask() == 0 ? 0 : pattern.support_size();
  if (k > target.n()) return Rational(0);
  Rational t(static_cast<unsigned long>(inj(pattern, target)), static_cast<unsigned long>(falling(target.n(), k)));
  t.canonicalize();
  return t;
}

std::uint64_t sigma(const UnlabeledClass& u, const LabeledNetwork& x) { return sub(u.representative(), x); }

std::uint64_t r_count(const UnlabeledClass& u, const LabeledNetwork& x) {
  if (u.vertex_count() > x.n()) return 0;
  const LabeledNetwork rep = u.representative().padded(x.n());
  std::set<DyadMask> orbit;
  for_each_permutation(x.n(), [&](std::span<const int> perm) { orbit.insert(rep.permuted(perm).mask()); });
  std::uint64_t count = 0;
  for (DyadMask member : orbit)
    if ((x.mask() & ~member) == 0) ++count;
  return count;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::uint64_t star_count_from_degrees(const DegreeDistribution& dd, int k) {
  if (k < 1) throw std::invalid_argument("star size must be at least 1");
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < dd.counts.size(); ++j)
    total += binomial(j, static_cast<std::uint64_t>(k)) * static_cast<std::uint64_t>(dd.counts[j]);
  return k == 1 ? total / 2 : total;
}

std::uint64_t two_disjoint_edges_from_degrees(const DegreeDistribution& dd) {
  const std::uint64_t edges = star_count_from_degrees(dd, 1);
  return binomial(edges, 2) - star_count_from_degrees(dd, 2);
}

}  // namespace exnet
