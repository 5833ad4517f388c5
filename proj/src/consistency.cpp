#include "exnet/consistency.hpp"

#include <cmath>

namespace exnet {

ExtendabilityReport<double> dissociated_extendable_check(const MobiusVector<double>& mv, int m,
                                                         const DissociatedExtensionOptions& options) {
  if (m < mv.n || m > kMaxExtensionNodes)
    throw InvalidParameters("extension size must satisfy n <= m <= " + std::to_string(kMaxExtensionNodes));
  const ClassCatalog& small = ClassCatalog::get(mv.n);
  const ClassCatalog& big = ClassCatalog::get(m);
  if (mv.z.size() != small.size()) throw InvalidParameters("Moebius vector has the wrong number of classes");

  ExtendabilityReport<double> report;
  report.n = mv.n;
  report.m = m;

  // Dropping the product constraints leaves the extension LP; if that is
  // already infeasible there is nothing to optimise.
  const ExtendabilityReport<double> relaxed = extendable_check(mv, m, options.feasibility_tolerance);
  if (!relaxed.feasible) {
    report.method = "linear relaxation infeasible";
    report.infeasibility = relaxed.infeasibility;
    report.violated_class = relaxed.violated_class;
    return report;
  }

  // Dissociated laws on m nodes, plus z_U(q) = z_U for the input classes.
  SimplexProblem problem = dissociated_problem(m);
  const std::size_t product_constraints = problem.constraints.size();
  for (std::size_t u = 1; u < small.size(); ++u) {
    ProductConstraint c;
    c.linear.emplace_back(big.index_of(small[u]), 1.0);
    c.constant = mv.z[u];
    problem.constraints.push_back(std::move(c));
  }

  report.method = "augmented Lagrangian, minimum constraint violation";

  auto product_residual = [&](const Eigen::VectorXd& q) {
    const Eigen::VectorXd r = problem.residuals(q);
    double worst = 0.0;
    for (std::size_t j = 0; j < product_constraints; ++j) worst = std::max(worst, std::abs(r(static_cast<Eigen::Index>(j))));
    return worst;
  };
  auto moment_residual = [&](const Eigen::VectorXd& q) {
    const Eigen::VectorXd r = problem.residuals(q);
    double worst = 0.0;
    for (Eigen::Index j = static_cast<Eigen::Index>(product_constraints); j < r.size(); ++j) worst = std::max(worst, std::abs(r(j)));
    return worst;
  };

  // Erdos-Renyi at the input edge density is dissociated on every node count,
  // so it is tried first; it is already feasible for Erdos-Renyi input.
  const double p = small.size() > 1 ? mv.z[1] : 0.0;
  Eigen::VectorXd er(static_cast<Eigen::Index>(big.size()));
  for (std::size_t w = 0; w < big.size(); ++w) {
    const int e = big.edge_count(w);
    er(static_cast<Eigen::Index>(w)) =
        static_cast<double>(big.orbit_size(w)) * std::pow(p, e) * std::pow(1.0 - p, dyad_count(m) - e);
  }

  Eigen::VectorXd best;
  double best_violation = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    const Eigen::VectorXd start =
        r == 0 ? er : random_simplex_point(big.size(), options.seed, static_cast<std::uint64_t>(r));
    ++report.restarts_used;
    Eigen::VectorXd q = start;
    if (problem.max_residual(start) > options.feasibility_tolerance)
      q = minimize_on_simplex(problem, start, options.solver).q;
    const double violation = problem.max_residual(q);
    if (violation < best_violation) {
      best_violation = violation;
      best = q;
    }
    if (best_violation <= options.feasibility_tolerance) break;
  }

  report.constraint_residual = product_residual(best);
  report.certificate_residual = moment_residual(best);
  report.infeasibility = best_violation;
  report.feasible = best_violation <= options.feasibility_tolerance;
  if (report.feasible) report.certificate = ClassDistribution<double>{m, std::vector<double>(best.data(), best.data() + best.size())};
  return report;
}

}  // namespace exnet
