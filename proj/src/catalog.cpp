#include "exnet/catalog.hpp"

#include <array>
#include <set>

#include "exnet/errors.hpp"

namespace exnet {

namespace {

std::uint64_t falling_factorial(int n, int k) {
  std::uint64_t f = 1;
  for (int i = 0; i < k; ++i) f *= static_cast<std::uint64_t>(n - i);
  return f;
}

}  // namespace

const ClassCatalog& ClassCatalog::get(int n) {
  if (n < 1 || n > kMaxCatalogNodes)
    throw SizeCapExceeded("class catalogs support 1 <= n <= " + std::to_string(kMaxCatalogNodes));
  static std::array<std::once_flag, kMaxCatalogNodes + 1> once;
  static std::array<std::unique_ptr<ClassCatalog>, kMaxCatalogNodes + 1> catalogs;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [&] { catalogs[slot].reset(new ClassCatalog(n)); });
  return *catalogs[slot];
}

ClassCatalog::ClassCatalog(int n) : n_(n), classes_(enumerate_classes(n, true)) {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    lookup_.emplace(std::make_pair(classes_[k].vertex_count(), classes_[k].canon.bits), k);
  const std::uint64_t n_fact = factorial(n);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    orbit_sizes_.push_back(n_fact / aut_count(representative(k)));
    const auto& c = classes_[k];
    sub_complete_.push_back(c.is_empty() ? 1
                                         : falling_factorial(n, c.vertex_count()) / aut_count(c.representative()));
    std::vector<std::size_t> parts;
    for (DyadMask component : dyad_components(c.canon.bits))
      parts.push_back(index_of(class_of(LabeledNetwork(n, component))));
    components_.push_back(std::move(parts));
  }
}

std::optional<std::size_t> ClassCatalog::find(const UnlabeledClass& c) const {
  auto it = lookup_.find({c.vertex_count(), c.canon.bits});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t ClassCatalog::index_of(const UnlabeledClass& c) const {
  if (auto k = find(c)) return *k;
  throw std::invalid_argument("class " + c.key() + " does not fit on " + std::to_string(n_) + " nodes");
}

std::size_t ClassCatalog::index_of(const LabeledNetwork& g) const {
  if (g.n() != n_) throw std::invalid_argument("network node count does not match catalog");
  return index_of_mask(g.mask());
}

std::size_t ClassCatalog::index_of_mask(DyadMask mask) const {
  std::call_once(mask_once_, [this] { build_mask_table(); });
  return mask_table_.at(mask);
}

void ClassCatalog::build_mask_table() const {
  mask_table_.assign(std::size_t{1} << dyad_count(n_), 0);
  std::vector<std::array<int, dyad_count(kMaxCatalogNodes)>> dyad_maps;
  for_each_permutation(n_, [&](std::span<const int> perm) {
    std::array<int, dyad_count(kMaxCatalogNodes)> map{};
    for (int d = 0; d < dyad_count(n_); ++d) {
      const Dyad dy = dyad_at(d);
      map[static_cast<std::size_t>(d)] =
          dyad_index(perm[static_cast<std::size_t>(dy.i)], perm[static_cast<std::size_t>(dy.j)]);
    }
    dyad_maps.push_back(map);
  });
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const DyadMask rep = classes_[k].canon.bits;
    for (const auto& map : dyad_maps) {
      DyadMask image = 0;
      for (DyadMask m = rep; m != 0; m &= m - 1)
        image |= DyadMask{1} << map[static_cast<std::size_t>(std::countr_zero(m))];
      mask_table_[image] = static_cast<std::uint16_t>(k);
    }
  }
}

std::uint32_t ClassCatalog::sigma(std::size_t u, std::size_t w) const {
  std::call_once(sigma_once_, [this] { build_sigma(); });
  return sigma_[u * classes_.size() + w];
}

// Every subset of W's edge set is a labeled subgraph; tallying the classes of
// all subsets gives one full column of the sigma matrix.
void ClassCatalog::build_sigma() const {
  std::call_once(mask_once_, [this] { build_mask_table(); });
  const std::size_t size = classes_.size();
  sigma_.assign(size * size, 0);
  for (std::size_t w = 0; w < size; ++w) {
    const DyadMask edges = classes_[w].canon.bits;
    DyadMask subset = 0;
    do {
      ++sigma_[mask_table_[subset] * size + w];
      subset = (subset - edges) & edges;
    } while (subset != 0);
  }
}

std::uint64_t ClassCatalog::r(std::size_t u, std::size_t x) const {
  // Double counting pairs (A in [x], B in [U], A subset of B).
  return orbit_sizes_[u] * sigma(x, u) / orbit_sizes_[x];
}

}  // namespace exnet
