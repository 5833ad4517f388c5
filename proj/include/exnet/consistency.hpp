#pragma once

// Marginalisation to induced subnetworks and extendability of exchangeable
// Moebius parameters to larger node sets.

#include <optional>
#include <string>
#include <vector>

#include "exnet/estimation.hpp"
#include "exnet/mobius.hpp"
#include "exnet/simplex.hpp"

namespace exnet {

/// Joint of the subnetwork induced by `keep` (0-based nodes, in the given order).
template <class T>
JointTable<T> marginalize_joint(const JointTable<T>& jt, const std::vector<int>& keep);

/// z restricted to the classes that fit on n_prime nodes.
template <class T>
MobiusVector<T> marginalize_mobius(const MobiusVector<T>& mv, int n_prime);

inline constexpr int kMaxExtensionNodes = 7;

template <class T>
struct ExtendabilityReport {
  bool feasible = false;
  int n = 0;
  int m = 0;
  std::optional<ClassDistribution<T>> certificate;
  /// Infeasible LP: artificial mass left after phase one, and the class of
  /// the constraint carrying most of it.
  T infeasibility{};
  std::optional<std::size_t> violated_class;  // index into ClassCatalog::get(n)
  /// Largest |z_U(certificate) - z_U| over the input classes.
  double certificate_residual = 0.0;
  /// Dissociated check: largest product-constraint violation at the best point.
  double constraint_residual = 0.0;
  int restarts_used = 0;
  std::string method;
};

/// Is there an exchangeable law on m nodes whose n-node margin has Moebius
/// parameters mv? Exact for Rational input. n <= m <= 7.
template <class T>
ExtendabilityReport<T> extendable_check(const MobiusVector<T>& mv, int m, double tol = 1e-9);

struct DissociatedExtensionOptions {
  int restarts = 8;
  std::uint64_t seed = 20240601;
  double feasibility_tolerance = 1e-9;
  AlOptions solver;
};

/// As extendable_check, with the extension also required to be dissociated.
/// Solved numerically; the certificate is checked against both constraint sets.
ExtendabilityReport<double> dissociated_extendable_check(const MobiusVector<double>& mv, int m,
                                                         const DissociatedExtensionOptions& options = {});

// ---------------------------------------------------------------------------

template <class T>
JointTable<T> marginalize_joint(const JointTable<T>& jt, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginalisation needs at least one node to keep");
  std::vector<bool> seen(static_cast<std::size_t>(jt.n), false);
  for (int v : keep) {
    if (v < 0 || v >= jt.n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("kept nodes must be distinct and in range");
    seen[static_cast<std::size_t>(v)] = true;
  }
  const int k = static_cast<int>(keep.size());
  std::vector<int> source(static_cast<std::size_t>(dyad_count(k)));
  for (int d = 0; d < dyad_count(k); ++d) {
    const Dyad dy = dyad_at(d);
    source[static_cast<std::size_t>(d)] = dyad_index(keep[static_cast<std::size_t>(dy.i)], keep[static_cast<std::size_t>(dy.j)]);
  }
  JointTable<T> out{k, std::vector<T>(std::size_t{1} << dyad_count(k), T(0))};
  for (std::size_t x = 0; x < jt.probs.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t d = 0; d < source.size(); ++d)
      if ((x >> source[d]) & 1U) y |= std::size_t{1} << d;
    out.probs[y] += jt.probs[x];
  }
  return out;
}

template <class T>
MobiusVector<T> marginalize_mobius(const MobiusVector<T>& mv, int n_prime) {
  if (n_prime < 1 || n_prime > mv.n) throw std::invalid_argument("target node count must lie in 1..n");
  const ClassCatalog& from = ClassCatalog::get(mv.n);
  const ClassCatalog& to = ClassCatalog::get(n_prime);
  MobiusVector<T> out{n_prime, std::vector<T>(to.size())};
  for (std::size_t u = 0; u < to.size(); ++u) out.z[u] = mv.z[from.index_of(to[u])];
  return out;
}

template <class T>
ExtendabilityReport<T> extendable_check(const MobiusVector<T>& mv, int m, double tol) {
  if (m < mv.n || m > kMaxExtensionNodes)
    throw InvalidParameters("extension size must satisfy n <= m <= " + std::to_string(kMaxExtensionNodes));
  const ClassCatalog& small = ClassCatalog::get(mv.n);
  const ClassCatalog& big = ClassCatalog::get(m);
  if (mv.z.size() != small.size()) throw InvalidParameters("Moebius vector has the wrong number of classes");

  // Row 0: total mass. Row u: E[sigma_U] / sub(U, K_m) = z_U for each non-empty class U.
  std::vector<std::vector<T>> a(small.size(), std::vector<T>(big.size(), T(0)));
  std::vector<T> b(small.size());
  for (std::size_t w = 0; w < big.size(); ++w) a[0][w] = T(1);
  b[0] = T(1);
  for (std::size_t u = 1; u < small.size(); ++u) {
    const std::size_t ub = big.index_of(small[u]);
    const T scale = from_count<T>(big.sub_in_complete(ub));
    for (std::size_t w = 0; w < big.size(); ++w) {
      const std::uint32_t s = big.sigma(ub, w);
      if (s != 0) a[u][w] = from_count<T>(s) / scale;
    }
    b[u] = mv.z[u];
  }

  ExtendabilityReport<T> report;
  report.n = mv.n;
  report.m = m;
  report.method = is_exact_v<T> ? "exact rational simplex" : "floating-point simplex";
  if (!approx_equal(mv.z[0], T(1), tol)) {
    report.violated_class = 0;
    report.infeasibility = T(mv.z[0] - T(1));
    return report;
  }
  const LpResult<T> lp = solve_lp(a, b, {}, tol);
  report.infeasibility = lp.infeasibility;
  if (lp.status != LpStatus::optimal) {
    report.feasible = false;
    report.violated_class = lp.worst_row;
    return report;
  }
  ClassDistribution<T> cert{m, lp.x};
  const MobiusVector<T> back = marginalize_mobius(mobius_from_class_distribution(cert), mv.n);
  for (std::size_t u = 0; u < small.size(); ++u)
    report.certificate_residual = std::max(report.certificate_residual, std::abs(to_double(back.z[u]) - to_double(mv.z[u])));
  report.feasible = true;
  report.certificate = std::move(cert);
  return report;
}

}  // namespace exnet
