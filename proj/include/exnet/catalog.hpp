#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "exnet/graph.hpp"

namespace exnet {

inline constexpr int kMaxCatalogNodes = 7;

/// The classes of all networks on n nodes, in class order with the empty class
/// at index 0, plus lookup tables shared by the exchangeable-model code.
/// Instances are created once per n and live for the program's lifetime.
class ClassCatalog {
 public:
  static const ClassCatalog& get(int n);

  int n() const { return n_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<UnlabeledClass>& classes() const { return classes_; }
  const UnlabeledClass& operator[](std::size_t k) const { return classes_[k]; }

  std::optional<std::size_t> find(const UnlabeledClass& c) const;
  std::size_t index_of(const UnlabeledClass& c) const;
  /// Class of a labeled network on exactly n nodes.
  std::size_t index_of(const LabeledNetwork& g) const;
  std::size_t index_of_mask(DyadMask mask) const;

  /// |[U]| = n! / aut(U padded to n).
  std::uint64_t orbit_size(std::size_t k) const { return orbit_sizes_[k]; }
  /// sub(U, K_n): copies of U in the complete graph.
  std::uint64_t sub_in_complete(std::size_t k) const { return sub_complete_[k]; }
  int edge_count(std::size_t k) const { return classes_[k].edge_count(); }
  /// Representative of class k on n nodes.
  LabeledNetwork representative(std::size_t k) const { return LabeledNetwork(n_, classes_[k].canon.bits); }

  /// sigma_U(W): copies of class u inside the representative of class w.
  std::uint32_t sigma(std::size_t u, std::size_t w) const;
  /// r_U(x) for x in class `x`: members of [U] containing a fixed member of [x].
  std::uint64_t r(std::size_t u, std::size_t x) const;

  /// Classes of the connected components of class k (empty for the empty class).
  const std::vector<std::size_t>& component_classes(std::size_t k) const { return components_[k]; }
  bool is_connected(std::size_t k) const { return components_[k].size() == 1; }

 private:
  explicit ClassCatalog(int n);
  void build_mask_table() const;
  void build_sigma() const;

  int n_;
  std::vector<UnlabeledClass> classes_;
  std::map<std::pair<int, DyadMask>, std::size_t> lookup_;
  std::vector<std::uint64_t> orbit_sizes_;
  std::vector<std::uint64_t> sub_complete_;
  std::vector<std::vector<std::size_t>> components_;

  mutable std::once_flag mask_once_;
  mutable std::vector<std::uint16_t> mask_table_;
  mutable std::once_flag sigma_once_;
  mutable std::vector<std::uint32_t> sigma_;
};

}  // namespace exnet
