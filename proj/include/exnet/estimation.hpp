#pragma once

// Maximum-likelihood estimation for exchangeable network models, exponential
// family (ERGM) statistics and fitting, and degree-distribution analysis.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exnet/constrained.hpp"
#include "exnet/graph.hpp"
#include "exnet/mobius.hpp"

namespace exnet {

/// z_U = t_inj(U, x) for every class on x's node count, exactly.
MobiusVector<Rational> exch_mle(const LabeledNetwork& x);

enum class FitStatus { optimal, boundary, non_unique, failed };
std::string to_string(FitStatus status);

struct FitReport {
  std::string family;
  FitStatus status = FitStatus::failed;
  double likelihood = 0.0;
  double log_likelihood = -std::numeric_limits<double>::infinity();
  double constraint_residual = 0.0;
  double kkt_residual = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  std::optional<MobiusVector<double>> z;
  std::optional<ClassDistribution<double>> q;
  // Exponential-family fits.
  std::vector<std::string> statistic_names;
  std::vector<double> observed;
  std::vector<double> nu;
  double gradient_norm = 0.0;
  // Further maximizers when the optimum is not unique. For dissociated fits
  // these are the two ends of the optimal family along its widest coordinate.
  std::vector<ClassDistribution<double>> alternatives;
};

struct DissociatedOptions {
  int restarts = 32;
  std::uint64_t seed = 20240601;
  double likelihood_tie = 1e-7;
  double distinct_q = 1e-4;
  double kkt_tolerance = 1e-6;
  double feasibility_tolerance = 1e-9;
  AlOptions solver;
};

/// Class-distribution parametrization of dissociated exchangeable laws on n
/// nodes: z = Z q with Z[u][w] = sigma_U(W) / sub(U, K_n), and one constraint
/// z_B = prod_i z_{C_i} per disconnected class B. The objective is left zero.
SimplexProblem dissociated_problem(int n);

/// Maximises P(X = x) over dissociated exchangeable laws. n <= 6.
FitReport dissociated_mle(const LabeledNetwork& x, const DissociatedOptions& options = {});

enum class ErgmFamily { full_exchangeable, frank_strauss, se_star, kneser, sem, erdos_renyi };
std::string to_string(ErgmFamily family);
ErgmFamily parse_ergm_family(const std::string& text);

struct ErgmSpec {
  ErgmFamily family = ErgmFamily::full_exchangeable;
  int n = 0;
};

inline constexpr int kMaxErgmNodes = 6;

/// Statistic labels in the order used by ergm_stats.
std::vector<std::string> ergm_stat_names(const ErgmSpec& spec);
std::vector<std::int64_t> ergm_stats(const ErgmSpec& spec, const LabeledNetwork& x);

/// log of the normalising constant, summed over classes with orbit weights.
double ergm_log_partition(const ErgmSpec& spec, const std::vector<double>& nu);
double ergm_eval(const ErgmSpec& spec, const std::vector<double>& nu, const LabeledNetwork& x);
/// Class distribution of the fitted model.
ClassDistribution<double> ergm_class_distribution(const ErgmSpec& spec, const std::vector<double>& nu);

struct ErgmFitOptions {
  int max_iterations = 300;
  double gradient_tolerance = 1e-10;
  double boundary_norm = 1e3;
  double boundary_gradient = 1e-6;
};

FitReport ergm_fit(const ErgmSpec& spec, const LabeledNetwork& x, const ErgmFitOptions& options = {});

struct CollisionGroup {
  DegreeDistribution degrees;
  std::vector<std::size_t> classes;  // indices into ClassCatalog::get(n)
};

/// Groups of at least two classes of n-node graphs sharing a degree distribution.
std::vector<CollisionGroup> degree_collision_classes(int n);

struct SummarizedCheck {
  bool ok = true;
  std::optional<std::pair<DyadMask, DyadMask>> violating_pair;
};

template <class T>
SummarizedCheck summarized_check(const JointTable<T>& jt, double tol = 1e-10);
template <class T>
SummarizedCheck summarized_check(const ClassDistribution<T>& cd, double tol = 1e-10);

struct DegreeFunctionCheck {
  bool is_function = true;
  std::optional<std::pair<LabeledNetwork, LabeledNetwork>> witness;
};

/// Whether sigma_U(x) depends on x only through its degree distribution, over
/// all graphs on n nodes. n <= 7.
DegreeFunctionCheck sigma_is_degree_function(const UnlabeledClass& u, int n);

/// P(x1) = P(x2) for one collision pair, as a linear functional of z and of q.
struct SummarizedConstraint {
  std::size_t first = 0;   // class indices into ClassCatalog::get(n)
  std::size_t second = 0;
  std::vector<Rational> z_coefficients;
  std::vector<Rational> q_coefficients;
};

std::vector<SummarizedConstraint> summarized_constraints(int n);

// ---------------------------------------------------------------------------

template <class T>
SummarizedCheck summarized_check(const JointTable<T>& jt, double tol) {
  if (jt.n > kMaxErgmNodes) throw SizeCapExceeded("summarized checks support n <= 6");
  SummarizedCheck result;
  std::map<DegreeDistribution, DyadMask> first;
  for (std::size_t x = 0; x < jt.probs.size(); ++x) {
    const DegreeDistribution dd = degree_distribution(LabeledNetwork(jt.n, static_cast<DyadMask>(x)));
    auto [it, inserted] = first.emplace(dd, static_cast<DyadMask>(x));
    if (inserted) continue;
    if (!approx_equal(jt.probs[it->second], jt.probs[x], tol)) {
      result.ok = false;
      result.violating_pair = std::make_pair(it->second, static_cast<DyadMask>(x));
      return result;
    }
  }
  return result;
}

template <class T>
SummarizedCheck summarized_check(const ClassDistribution<T>& cd, double tol) {
  const ClassCatalog& cat = ClassCatalog::get(cd.n);
  SummarizedCheck result;
  for (const CollisionGroup& g : degree_collision_classes(cd.n)) {
    const std::size_t a = g.classes.front();
    const T pa = cd.q[a] / from_count<T>(cat.orbit_size(a));
    for (std::size_t k = 1; k < g.classes.size(); ++k) {
      const std::size_t b = g.classes[k];
      if (!approx_equal(pa, T(cd.q[b] / from_count<T>(cat.orbit_size(b))), tol)) {
        result.ok = false;
        result.violating_pair = std::make_pair(cat[a].canon.bits, cat[b].canon.bits);
        return result;
      }
    }
  }
  return result;
}

}  // namespace exnet
