#include "exnet/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exnet {

namespace {

struct Derivatives {
  Eigen::VectorXd value;   // h_j
  Eigen::MatrixXd dz;      // dh_j / dz, one row per constraint
};

double product_without(const std::vector<std::size_t>& factors, const Eigen::VectorXd& z, std::size_t skip_a,
                       std::size_t skip_b = std::numeric_limits<std::size_t>::max()) {
  double p = 1.0;
  for (std::size_t pos = 0; pos < factors.size(); ++pos)
    if (pos != skip_a && pos != skip_b) p *= z(static_cast<Eigen::Index>(factors[pos]));
  return p;
}

Derivatives evaluate(const SimplexProblem& problem, const Eigen::VectorXd& z) {
  const auto m = static_cast<Eigen::Index>(problem.constraints.size());
  Derivatives d{Eigen::VectorXd::Zero(m), Eigen::MatrixXd::Zero(m, z.size())};
  for (Eigen::Index j = 0; j < m; ++j) {
    const ProductConstraint& c = problem.constraints[static_cast<std::size_t>(j)];
    double h = -c.constant;
    for (auto [k, a] : c.linear) {
      h += a * z(static_cast<Eigen::Index>(k));
      d.dz(j, static_cast<Eigen::Index>(k)) += a;
    }
    if (!c.factors.empty()) {
      h -= c.coefficient * product_without(c.factors, z, c.factors.size());
      for (std::size_t pos = 0; pos < c.factors.size(); ++pos)
        d.dz(j, static_cast<Eigen::Index>(c.factors[pos])) -= c.coefficient * product_without(c.factors, z, pos);
    }
    d.value(j) = h;
  }
  return d;
}

// Sum_j weights_j * d^2 h_j / dz^2.
Eigen::MatrixXd weighted_hessian_z(const SimplexProblem& problem, const Eigen::VectorXd& z,
                                   const Eigen::VectorXd& weights) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(z.size(), z.size());
  for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
    const ProductConstraint& c = problem.constraints[j];
    const double w = weights(static_cast<Eigen::Index>(j)) * c.coefficient;
    if (w == 0.0) continue;
    for (std::size_t p = 0; p < c.factors.size(); ++p)
      for (std::size_t r = 0; r < c.factors.size(); ++r) {
        if (p == r) continue;
        h(static_cast<Eigen::Index>(c.factors[p]), static_cast<Eigen::Index>(c.factors[r])) -=
            w * product_without(c.factors, z, p, r);
      }
  }
  return h;
}

struct AlState {
  const SimplexProblem& problem;
  Eigen::VectorXd lambda;
  double mu;

  double value(const Eigen::VectorXd& q, Eigen::VectorXd* grad) const {
    const Eigen::VectorXd z = problem.z_map * q;
    const Derivatives d = evaluate(problem, z);
    const Eigen::VectorXd weights = lambda + mu * d.value;
    if (grad) *grad = problem.objective + problem.z_map.transpose() * (d.dz.transpose() * weights);
    return problem.objective.dot(q) + lambda.dot(d.value) + 0.5 * mu * d.value.squaredNorm();
  }
};

int inner_solve(const AlState& state, Eigen::VectorXd& q, const AlOptions& options) {
  Eigen::VectorXd grad;
  double f = state.value(q, &grad);
  double step = 1.0;
  int it = 0;
  for (; it < options.max_inner; ++it) {
    const Eigen::VectorXd full = project_to_simplex(q - grad);
    if ((full - q).lpNorm<Eigen::Infinity>() < options.inner_tol) break;
    Eigen::VectorXd trial;
    Eigen::VectorXd trial_grad;
    double trial_f = 0.0;
    bool accepted = false;
    for (int back = 0; back < 60; ++back) {
      trial = project_to_simplex(q - step * grad);
      trial_f = state.value(trial, &trial_grad);
      if (trial_f <= f + 1e-4 * grad.dot(trial - q)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const Eigen::VectorXd s = trial - q;
    const Eigen::VectorXd y = trial_grad - grad;
    const double sy = s.dot(y);
    step = sy > 1e-300 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e12) : std::min(step * 4.0, 1e12);
    q = trial;
    grad = trial_grad;
    f = trial_f;
  }
  return it;
}

double kkt_residual(const SimplexProblem& problem, const Eigen::VectorXd& q, const Eigen::VectorXd& lambda) {
  const Eigen::VectorXd z = problem.z_map * q;
  const Derivatives d = evaluate(problem, z);
  const Eigen::VectorXd g = problem.objective + problem.z_map.transpose() * (d.dz.transpose() * lambda);
  double nu = 0.0;
  int support = 0;
  for (Eigen::Index i = 0; i < q.size(); ++i)
    if (q(i) > 1e-9) {
      nu += g(i);
      ++support;
    }
  nu = support > 0 ? nu / support : 0.0;
  double r = d.value.size() > 0 ? d.value.lpNorm<Eigen::Infinity>() : 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q(i) > 1e-9)
      r = std::max(r, std::abs(g(i) - nu));
    else
      r = std::max(r, nu - g(i));
  }
  return r;
}

// Newton iterations on the KKT system restricted to the support of q. The
// system may be singular on flat optimal faces, so steps are minimum-norm.
bool polish(const SimplexProblem& problem, Eigen::VectorXd& q, Eigen::VectorXd& lambda) {
  const auto m = static_cast<Eigen::Index>(problem.constraints.size());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < q.size(); ++i)
    if (q(i) > 1e-8) support.push_back(i);
  if (support.empty()) return false;

  Eigen::VectorXd qs(static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) qs(static_cast<Eigen::Index>(k)) = q(support[k]);
  qs /= qs.sum();
  const auto s = qs.size();
  Eigen::MatrixXd zmap(problem.z_map.rows(), s);
  Eigen::VectorXd cost(s);
  for (Eigen::Index k = 0; k < s; ++k) {
    zmap.col(k) = problem.z_map.col(support[static_cast<std::size_t>(k)]);
    cost(k) = problem.objective(support[static_cast<std::size_t>(k)]);
  }
  Eigen::VectorXd lam = lambda;
  double nu = 0.0;

  auto kkt = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& l, double v, Eigen::MatrixXd* jac) {
    const Eigen::VectorXd z = zmap * x;
    const Derivatives d = evaluate(problem, z);
    const Eigen::MatrixXd jq = d.dz * zmap;  // m x s
    Eigen::VectorXd f(s + m + 1);
    f.head(s) = cost + jq.transpose() * l + Eigen::VectorXd::Constant(s, v);
    f.segment(s, m) = d.value;
    f(s + m) = x.sum() - 1.0;
    if (jac) {
      jac->setZero(s + m + 1, s + m + 1);
      jac->topLeftCorner(s, s) = zmap.transpose() * weighted_hessian_z(problem, z, l) * zmap;
      jac->block(0, s, s, m) = jq.transpose();
      jac->block(s, 0, m, s) = jq;
      jac->block(0, s + m, s, 1).setOnes();
      jac->block(s + m, 0, 1, s).setOnes();
    }
    return f;
  };

  {
    const Eigen::VectorXd f = kkt(qs, lam, 0.0, nullptr);
    nu = -f.head(s).mean();
  }
  Eigen::MatrixXd jac;
  for (int it = 0; it < 40; ++it) {
    const Eigen::VectorXd f = kkt(qs, lam, nu, &jac);
    if (f.lpNorm<Eigen::Infinity>() < 1e-15) break;
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-f);
    qs += step.head(s);
    lam += step.segment(s, m);
    nu += step(s + m);
    if (!qs.allFinite()) return false;
  }
  if ((qs.array() < -1e-12).any()) return false;
  qs = qs.cwiseMax(0.0);
  qs /= qs.sum();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(q.size());
  for (std::size_t k = 0; k < support.size(); ++k) out(support[k]) = qs(static_cast<Eigen::Index>(k));
  q = out;
  lambda = lam;
  return true;
}

}  // namespace

Eigen::VectorXd SimplexProblem::residuals(const Eigen::VectorXd& q) const {
  return evaluate(*this, z_map * q).value;
}

double SimplexProblem::max_residual(const Eigen::VectorXd& q) const {
  const Eigen::VectorXd r = residuals(q);
  return r.size() > 0 ? r.lpNorm<Eigen::Infinity>() : 0.0;
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

AlResult minimize_on_simplex(const SimplexProblem& problem, const Eigen::VectorXd& start, const AlOptions& options) {
  const auto m = static_cast<Eigen::Index>(problem.constraints.size());
  AlState state{problem, Eigen::VectorXd::Zero(m), options.initial_penalty};
  AlResult result;
  Eigen::VectorXd q = project_to_simplex(start);
  double previous = std::numeric_limits<double>::infinity();
  for (int outer = 0; outer < options.max_outer; ++outer) {
    result.iterations += inner_solve(state, q, options);
    const Eigen::VectorXd h = problem.residuals(q);
    const double violation = m > 0 ? h.lpNorm<Eigen::Infinity>() : 0.0;
    state.lambda += state.mu * h;
    if (violation < options.feasibility_tol) break;
    if (violation > 0.25 * previous) state.mu = std::min(state.mu * 10.0, options.max_penalty);
    previous = violation;
  }
  result.multipliers = state.lambda;
  if (options.polish && m > 0) {
    Eigen::VectorXd polished = q;
    Eigen::VectorXd lambda = state.lambda;
    if (polish(problem, polished, lambda)) {
      const double before = problem.max_residual(q);
      const double after = problem.max_residual(polished);
      const double drift = problem.objective.dot(polished) - problem.objective.dot(q);
      if (after <= std::max(before, 1e-13) && drift <= 1e-6) {
        q = polished;
        result.multipliers = lambda;
      }
    }
  }
  result.q = q;
  result.objective = problem.objective.dot(q);
  result.residual = problem.max_residual(q);
  result.kkt_residual = kkt_residual(problem, q, result.multipliers);
  return result;
}

Eigen::VectorXd random_simplex_point(std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 rng(split_seed(seed, stream));
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = -std::log(rng.uniform());
  return v / v.sum();
}

}  // namespace exnet
