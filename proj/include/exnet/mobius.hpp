#pragma once

// Moebius parametrization of distributions over networks on n nodes.
//
// Every routine is templated on the scalar: `Rational` for exact work and
// `double` for the float backend. Full-lattice transforms touch all 2^m dyad
// subsets and are meant for n <= 5; the class-indexed (exchangeable) routines
// go through ClassCatalog and work up to n = 7.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exnet/catalog.hpp"
#include "exnet/dependence_graph.hpp"
#include "exnet/errors.hpp"
#include "exnet/graph.hpp"
#include "exnet/rational.hpp"

namespace exnet {

inline constexpr double kValidationTolerance = 1e-9;
inline constexpr int kMaxLatticeNodes = 6;

/// P(X = x) for every labeled network, indexed by dyad mask.
template <class T>
struct JointTable {
  int n = 0;
  std::vector<T> probs;

  static JointTable point_mass(const LabeledNetwork& x) {
    JointTable jt{x.n(), std::vector<T>(std::size_t{1} << dyad_count(x.n()), T(0))};
    jt.probs[x.mask()] = T(1);
    return jt;
  }
  std::size_t size() const { return probs.size(); }
  T total() const {
    T sum(0);
    for (const T& p : probs) sum += p;
    return sum;
  }
};

/// z_B = P(B subset of X) for every dyad subset B.
template <class T>
struct LabeledMobius {
  int n = 0;
  std::vector<T> z;
};

/// Exchangeable Moebius parameters z_U, indexed like ClassCatalog::get(n).
template <class T>
struct MobiusVector {
  int n = 0;
  std::vector<T> z;

  const T& at(const UnlabeledClass& c) const { return z[ClassCatalog::get(n).index_of(c)]; }
  T& at(const UnlabeledClass& c) { return z[ClassCatalog::get(n).index_of(c)]; }
};

/// Probability of X falling in each class; uniform within a class.
template <class T>
struct ClassDistribution {
  int n = 0;
  std::vector<T> q;

  const T& at(const UnlabeledClass& c) const { return q[ClassCatalog::get(n).index_of(c)]; }
  static ClassDistribution point_mass(int n, std::size_t k) {
    ClassDistribution cd{n, std::vector<T>(ClassCatalog::get(n).size(), T(0))};
    cd.q[k] = T(1);
    return cd;
  }
};

template <class T>
struct MobiusValidation {
  bool ok = true;
  std::string message;
  std::optional<std::size_t> violating_class;
  std::optional<DyadMask> configuration;
  T value{};
};

inline void check_lattice_size(int n) {
  if (n < 1 || n > kMaxLatticeNodes)
    throw SizeCapExceeded("full dyad-lattice transforms support n <= " + std::to_string(kMaxLatticeNodes));
}

/// a[S] <- sum over supersets T of S of a[T].
template <class T>
void superset_zeta(std::vector<T>& a, int bits) {
  for (int b = 0; b < bits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < a.size(); ++s)
      if (!(s & bit)) a[s] += a[s | bit];
  }
}

/// Inverse of superset_zeta: a[S] <- sum over T containing S of (-1)^{|T\S|} a[T].
template <class T>
void superset_mobius(std::vector<T>& a, int bits) {
  for (int b = 0; b < bits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < a.size(); ++s)
      if (!(s & bit)) a[s] -= a[s | bit];
  }
}

template <class T>
LabeledMobius<T> labeled_mobius_from_joint(const JointTable<T>& jt) {
  check_lattice_size(jt.n);
  LabeledMobius<T> lm{jt.n, jt.probs};
  superset_zeta(lm.z, dyad_count(jt.n));
  return lm;
}

template <class T>
JointTable<T> joint_from_labeled_mobius(const LabeledMobius<T>& lm, double tol = kValidationTolerance) {
  check_lattice_size(lm.n);
  JointTable<T> jt{lm.n, lm.z};
  superset_mobius(jt.probs, dyad_count(lm.n));
  for (std::size_t x = 0; x < jt.probs.size(); ++x)
    if (is_below(jt.probs[x], T(0), tol))
      throw InvalidParameters("Moebius parameters imply negative probability " + to_string(jt.probs[x]) +
                                  " for configuration " + format_edge_list(LabeledNetwork(lm.n, static_cast<DyadMask>(x))),
                              static_cast<long long>(x));
  return jt;
}

/// Unnormalised check on a single configuration: sum_U (-1)^{|U|-|x|} r_U(x) z_U.
template <class T>
T exch_probability_unchecked(const MobiusVector<T>& mv, std::size_t x_class) {
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  T p(0);
  const int ex = cat.edge_count(x_class);
  for (std::size_t u = 0; u < cat.size(); ++u) {
    if (cat.edge_count(u) < ex) continue;
    const std::uint64_t r = cat.r(u, x_class);
    if (r == 0) continue;
    const T term = from_count<T>(r) * mv.z[u];
    if ((cat.edge_count(u) - ex) % 2 == 0)
      p += term;
    else
      p -= term;
  }
  return p;
}

template <class T>
T exch_joint_from_mobius(const MobiusVector<T>& mv, const LabeledNetwork& x, double tol = kValidationTolerance) {
  if (x.n() != mv.n) throw std::invalid_argument("network and Moebius vector have different node counts");
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  const T p = exch_probability_unchecked(mv, cat.index_of(x));
  if (is_below(p, T(0), tol))
    throw InvalidParameters("Moebius parameters imply negative probability " + to_string(p) + " for configuration " +
                                format_edge_list(x),
                            static_cast<long long>(x.mask()));
  return p;
}

/// q_W = |[W]| P(W) for every class W.
template <class T>
ClassDistribution<T> class_distribution_from_mobius(const MobiusVector<T>& mv, double tol = kValidationTolerance) {
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  ClassDistribution<T> cd{mv.n, std::vector<T>(cat.size(), T(0))};
  for (std::size_t w = 0; w < cat.size(); ++w) {
    const T p = exch_probability_unchecked(mv, w);
    if (is_below(p, T(0), tol))
      throw InvalidParameters("Moebius parameters imply negative probability for class " + cat[w].key(),
                              static_cast<long long>(cat[w].canon.bits));
    cd.q[w] = from_count<T>(cat.orbit_size(w)) * p;
  }
  return cd;
}

/// z_U = E[sigma_U(X)] / sub(U, K_n).
template <class T>
MobiusVector<T> mobius_from_class_distribution(const ClassDistribution<T>& cd) {
  const ClassCatalog& cat = ClassCatalog::get(cd.n);
  MobiusVector<T> mv{cd.n, std::vector<T>(cat.size(), T(0))};
  for (std::size_t u = 0; u < cat.size(); ++u) {
    T expected(0);
    for (std::size_t w = 0; w < cat.size(); ++w) {
      const std::uint32_t s = cat.sigma(u, w);
      if (s != 0) expected += from_count<T>(s) * cd.q[w];
    }
    mv.z[u] = expected / from_count<T>(cat.sub_in_complete(u));
  }
  return mv;
}

template <class T>
JointTable<T> joint_from_class_distribution(const ClassDistribution<T>& cd) {
  check_lattice_size(cd.n);
  const ClassCatalog& cat = ClassCatalog::get(cd.n);
  JointTable<T> jt{cd.n, std::vector<T>(std::size_t{1} << dyad_count(cd.n), T(0))};
  for (std::size_t x = 0; x < jt.probs.size(); ++x) {
    const std::size_t w = cat.index_of_mask(static_cast<DyadMask>(x));
    jt.probs[x] = cd.q[w] / from_count<T>(cat.orbit_size(w));
  }
  return jt;
}

/// Sums the joint within classes. Only meaningful for exchangeable joints.
template <class T>
ClassDistribution<T> class_distribution_from_joint(const JointTable<T>& jt) {
  const ClassCatalog& cat = ClassCatalog::get(jt.n);
  ClassDistribution<T> cd{jt.n, std::vector<T>(cat.size(), T(0))};
  for (std::size_t x = 0; x < jt.probs.size(); ++x) cd.q[cat.index_of_mask(static_cast<DyadMask>(x))] += jt.probs[x];
  return cd;
}

/// True iff isomorphic configurations are equiprobable.
template <class T>
bool is_exchangeable(const JointTable<T>& jt, double tol = 1e-10) {
  const ClassCatalog& cat = ClassCatalog::get(jt.n);
  std::vector<std::optional<T>> seen(cat.size());
  for (std::size_t x = 0; x < jt.probs.size(); ++x) {
    auto& slot = seen[cat.index_of_mask(static_cast<DyadMask>(x))];
    if (!slot)
      slot = jt.probs[x];
    else if (!approx_equal(*slot, jt.probs[x], tol))
      return false;
  }
  return true;
}

template <class T>
LabeledMobius<T> labeled_from_exchangeable(const MobiusVector<T>& mv) {
  check_lattice_size(mv.n);
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  LabeledMobius<T> lm{mv.n, std::vector<T>(std::size_t{1} << dyad_count(mv.n))};
  for (std::size_t b = 0; b < lm.z.size(); ++b) lm.z[b] = mv.z[cat.index_of_mask(static_cast<DyadMask>(b))];
  return lm;
}

/// Moebius parameters of a dyad set B under a bidirected dependence graph:
/// the product of z over the connected components of B.
template <class T>
T bidirected_mobius(const DependenceGraph& dep, const std::map<DyadMask, T>& z_connected, DyadMask b) {
  T product(1);
  for (DyadMask component : dep.components(b)) {
    auto it = z_connected.find(component);
    if (it == z_connected.end())
      throw std::invalid_argument("missing Moebius parameter for connected dyad set " + std::to_string(component));
    product *= it->second;
  }
  return product;
}

/// P(X_H = 1, X_rest = 0) = sum over B containing H of (-1)^{|B\H|} prod_C z_C.
template <class T>
T bidirected_joint(const DependenceGraph& dep, const std::map<DyadMask, T>& z_connected, DyadMask h,
                   double tol = kValidationTolerance) {
  const DyadMask all = full_mask(dep.n);
  const DyadMask free = all & ~h;
  T p(0);
  DyadMask extra = 0;
  do {
    const T term = bidirected_mobius(dep, z_connected, h | extra);
    if (std::popcount(extra) % 2 == 0)
      p += term;
    else
      p -= term;
    extra = (extra - free) & free;
  } while (extra != 0);
  if (is_below(p, T(0), tol))
    throw InvalidParameters("bidirected Moebius parameters imply negative probability " + to_string(p),
                            static_cast<long long>(h));
  return p;
}

/// Checks z_empty = 1, 0 <= z <= 1 and nonnegativity of every configuration.
template <class T>
MobiusValidation<T> validate_mobius(const MobiusVector<T>& mv, double tol = kValidationTolerance) {
  MobiusValidation<T> report;
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  if (mv.z.size() != cat.size()) {
    report.ok = false;
    report.message = "expected " + std::to_string(cat.size()) + " class values, got " + std::to_string(mv.z.size());
    return report;
  }
  if (!approx_equal(mv.z[0], T(1), tol)) {
    report.ok = false;
    report.message = "z of the empty class must be 1";
    report.violating_class = 0;
    report.value = mv.z[0];
    return report;
  }
  for (std::size_t u = 0; u < cat.size(); ++u) {
    if (is_below(mv.z[u], T(0), tol) || is_below(T(1), mv.z[u], tol)) {
      report.ok = false;
      report.message = "z of class " + cat[u].key() + " is outside [0, 1]";
      report.violating_class = u;
      report.value = mv.z[u];
      return report;
    }
  }
  for (std::size_t w = 0; w < cat.size(); ++w) {
    const T p = exch_probability_unchecked(mv, w);
    if (is_below(p, T(0), tol)) {
      report.ok = false;
      report.message = "negative probability for configuration of class " + cat[w].key();
      report.violating_class = w;
      report.configuration = cat[w].canon.bits;
      report.value = p;
      return report;
    }
  }
  return report;
}

/// Independent dyads with a common tie probability: z_U = p^{|E(U)|}.
template <class T>
MobiusVector<T> er_mobius(int n, const T& p) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  MobiusVector<T> mv{n, std::vector<T>(cat.size())};
  for (std::size_t u = 0; u < cat.size(); ++u) {
    T value(1);
    for (int e = 0; e < cat.edge_count(u); ++e) value *= p;
    mv.z[u] = value;
  }
  return mv;
}

template <class T>
MobiusVector<double> to_double(const MobiusVector<T>& mv) {
  MobiusVector<double> out{mv.n, {}};
  for (const T& v : mv.z) out.z.push_back(to_double(v));
  return out;
}

template <class T>
JointTable<double> to_double(const JointTable<T>& jt) {
  JointTable<double> out{jt.n, {}};
  for (const T& v : jt.probs) out.probs.push_back(to_double(v));
  return out;
}

}  // namespace exnet
