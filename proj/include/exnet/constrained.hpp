#pragma once

// Augmented-Lagrangian solver for linear objectives over the probability
// simplex with equality constraints of the form
//
//   h(q) = sum_k a_k z_k - b - coefficient * prod_{i in factors} z_i,   z = Z q.
//
// Inner problems are solved by projected gradient with Barzilai-Borwein steps
// and Armijo backtracking; a final Newton step on the KKT system of the active
// face tightens feasibility to roughly machine precision.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "exnet/random.hpp"

namespace exnet {

struct ProductConstraint {
  std::vector<std::pair<std::size_t, double>> linear;
  double constant = 0.0;
  double coefficient = 1.0;
  std::vector<std::size_t> factors;  // may repeat; empty means no product term
};

struct SimplexProblem {
  Eigen::MatrixXd z_map;      // z = z_map * q
  Eigen::VectorXd objective;  // minimise objective . q
  std::vector<ProductConstraint> constraints;

  std::size_t dim() const { return static_cast<std::size_t>(z_map.cols()); }
  Eigen::VectorXd residuals(const Eigen::VectorXd& q) const;
  double max_residual(const Eigen::VectorXd& q) const;
};

struct AlOptions {
  int max_outer = 60;
  int max_inner = 4000;
  double inner_tol = 1e-11;
  double feasibility_tol = 1e-11;
  double initial_penalty = 10.0;
  double max_penalty = 1e9;
  bool polish = true;
};

struct AlResult {
  Eigen::VectorXd q;
  Eigen::VectorXd multipliers;
  double objective = 0.0;
  double residual = 0.0;      // max |h_j(q)|
  double kkt_residual = 0.0;  // feasibility, stationarity and dual sign on the simplex
  int iterations = 0;         // inner iterations summed over outer rounds
};

/// Euclidean projection onto {q >= 0, sum q = 1}.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

AlResult minimize_on_simplex(const SimplexProblem& problem, const Eigen::VectorXd& start, const AlOptions& options);

/// Dirichlet(1,...,1) draw from a seeded stream; identical across platforms.
Eigen::VectorXd random_simplex_point(std::size_t dim, std::uint64_t seed, std::uint64_t stream);

}  // namespace exnet
