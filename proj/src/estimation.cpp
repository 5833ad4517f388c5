#include "exnet/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "exnet/homcount.hpp"
#include "exnet/simplex.hpp"

namespace exnet {

MobiusVector<Rational> exch_mle(const LabeledNetwork& x) {
  const ClassCatalog& cat = ClassCatalog::get(x.n());
  MobiusVector<Rational> mv{x.n(), std::vector<Rational>(cat.size())};
  for (std::size_t u = 0; u < cat.size(); ++u) mv.z[u] = t_inj(cat[u].representative(), x);
  return mv;
}

std::string to_string(FitStatus status) {
  switch (status) {
    case FitStatus::optimal: return "optimal";
    case FitStatus::boundary: return "boundary";
    case FitStatus::non_unique: return "non_unique";
    case FitStatus::failed: return "failed";
  }
  return "failed";
}

// ---------------------------------------------------------------------------
// Dissociated maximum likelihood

SimplexProblem dissociated_problem(int n) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  const auto k = static_cast<Eigen::Index>(cat.size());
  SimplexProblem problem;
  problem.z_map = Eigen::MatrixXd::Zero(k, k);
  for (std::size_t u = 0; u < cat.size(); ++u) {
    const double scale = static_cast<double>(cat.sub_in_complete(u));
    for (std::size_t w = 0; w < cat.size(); ++w) {
      const std::uint32_t s = cat.sigma(u, w);
      if (s != 0) problem.z_map(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)) = s / scale;
    }
  }
  problem.objective = Eigen::VectorXd::Zero(k);
  for (std::size_t b = 1; b < cat.size(); ++b) {
    if (cat.is_connected(b)) continue;
    ProductConstraint c;
    c.linear.emplace_back(b, 1.0);
    c.factors = cat.component_classes(b);
    problem.constraints.push_back(std::move(c));
  }
  return problem;
}

namespace {

ClassDistribution<double> to_distribution(int n, const Eigen::VectorXd& q) {
  return ClassDistribution<double>{n, std::vector<double>(q.data(), q.data() + q.size())};
}

ClassDistribution<double> er_class_distribution(int n, double p) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  ClassDistribution<double> cd{n, std::vector<double>(cat.size())};
  const int m = dyad_count(n);
  for (std::size_t w = 0; w < cat.size(); ++w) {
    const int e = cat.edge_count(w);
    cd.q[w] = static_cast<double>(cat.orbit_size(w)) * std::pow(p, e) * std::pow(1.0 - p, m - e);
  }
  return cd;
}

bool lex_greater(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) > b(i) + tol) return true;
    if (a(i) < b(i) - tol) return false;
  }
  return false;
}

struct Candidate {
  Eigen::VectorXd q;
  double likelihood = 0.0;
  double residual = 0.0;
  double kkt = 0.0;
};

}  // namespace

FitReport dissociated_mle(const LabeledNetwork& x, const DissociatedOptions& options) {
  const int n = x.n();
  if (n > kMaxErgmNodes) throw SizeCapExceeded("dissociated estimation supports n <= 6");
  const ClassCatalog& cat = ClassCatalog::get(n);
  const std::size_t xk = cat.index_of(x);
  const double orbit = static_cast<double>(cat.orbit_size(xk));

  SimplexProblem problem = dissociated_problem(n);
  problem.objective(static_cast<Eigen::Index>(xk)) = -1.0;

  const double density = dyad_count(n) > 0 ? static_cast<double>(x.edge_count()) / dyad_count(n) : 0.0;
  const ClassDistribution<double> er = er_class_distribution(n, density);
  const Eigen::VectorXd er_start = Eigen::Map<const Eigen::VectorXd>(er.q.data(), static_cast<Eigen::Index>(er.q.size()));

  FitReport report;
  report.family = "dissociated";
  std::vector<Candidate> candidates;
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    const Eigen::VectorXd start = r == 0 ? er_start : random_simplex_point(cat.size(), options.seed, static_cast<std::uint64_t>(r));
    const AlResult res = minimize_on_simplex(problem, start, options.solver);
    report.iterations += res.iterations;
    candidates.push_back({res.q, res.q(static_cast<Eigen::Index>(xk)) / orbit, res.residual, res.kkt_residual});
  }
  report.restarts_used = restarts;

  // Best feasible point first; KKT failures only matter if nothing else is left.
  auto feasible = [&](const Candidate& c) { return c.residual <= options.feasibility_tolerance; };
  auto valid = [&](const Candidate& c) { return feasible(c) && c.kkt <= options.kkt_tolerance; };
  const Candidate* best = nullptr;
  for (const Candidate& c : candidates)
    if (valid(c) && (!best || c.likelihood > best->likelihood)) best = &c;

  if (!best) {
    for (const Candidate& c : candidates)
      if (!best || c.kkt < best->kkt) best = &c;
    report.status = FitStatus::failed;
    report.q = to_distribution(n, best->q);
    report.z = mobius_from_class_distribution(*report.q);
    report.likelihood = best->likelihood;
    report.log_likelihood = std::log(best->likelihood);
    report.constraint_residual = best->residual;
    report.kkt_residual = best->kkt;
    return report;
  }

  std::vector<Eigen::VectorXd> maximizers;
  for (const Candidate& c : candidates)
    if (valid(c) && c.likelihood >= best->likelihood - options.likelihood_tie) maximizers.push_back(c.q);

  const double best_likelihood = best->likelihood;
  const SimplexProblem base = dissociated_problem(n);
  SimplexProblem face = base;
  face.z_map.conservativeResize(base.z_map.rows() + 1, Eigen::NoChange);
  face.z_map.row(base.z_map.rows()).setZero();
  face.z_map(base.z_map.rows(), static_cast<Eigen::Index>(xk)) = 1.0;
  ProductConstraint hold;
  hold.linear.emplace_back(static_cast<std::size_t>(base.z_map.rows()), 1.0);
  hold.constant = best->q(static_cast<Eigen::Index>(xk));
  face.constraints.push_back(hold);

  // Secondary optimisation over the optimal set; keeps maximizers only.
  auto explore = [&](const Eigen::VectorXd& objective, const Eigen::VectorXd& start) {
    face.objective = objective;
    const AlResult res = minimize_on_simplex(face, start, options.solver);
    report.iterations += res.iterations;
    const double likelihood = res.q(static_cast<Eigen::Index>(xk)) / orbit;
    if (base.max_residual(res.q) > options.feasibility_tolerance ||
        std::abs(likelihood - best_likelihood) > options.likelihood_tie)
      return false;
    maximizers.push_back(res.q);
    return true;
  };

  // Restarts often agree on a single point of a flat optimum, so the optimal
  // set is also probed along seeded random directions.
  const Eigen::VectorXd best_q = best->q;
  for (std::uint64_t probe = 0; probe < 2; ++probe) {
    Eigen::VectorXd direction(static_cast<Eigen::Index>(cat.size()));
    SplitMix64 rng(split_seed(options.seed ^ 0x5A5A5A5AULL, probe));
    for (Eigen::Index i = 0; i < direction.size(); ++i) direction(i) = rng.normal();
    explore(direction, best_q);
    explore(-direction, best_q);
  }

  bool distinct = false;
  for (std::size_t a = 0; a < maximizers.size() && !distinct; ++a)
    for (std::size_t b = a + 1; b < maximizers.size() && !distinct; ++b)
      distinct = (maximizers[a] - maximizers[b]).lpNorm<Eigen::Infinity>() > options.distinct_q;

  if (distinct) {
    // Ends of the optimal family along the z coordinate that varies most.
    Eigen::VectorXd lo_z = Eigen::VectorXd::Constant(base.z_map.rows(), 2.0);
    Eigen::VectorXd hi_z = Eigen::VectorXd::Constant(base.z_map.rows(), -1.0);
    for (const Eigen::VectorXd& q : maximizers) {
      const Eigen::VectorXd z = base.z_map * q;
      lo_z = lo_z.cwiseMin(z);
      hi_z = hi_z.cwiseMax(z);
    }
    Eigen::Index widest = 0;
    (hi_z - lo_z).maxCoeff(&widest);
    const Eigen::VectorXd row = base.z_map.row(widest).transpose();
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd start = maximizers.front();
      for (const Eigen::VectorXd& q : maximizers)
        if (sign * (row.dot(q) - row.dot(start)) < 0) start = q;
      if (explore(sign * row, start)) report.alternatives.push_back(to_distribution(n, maximizers.back()));
    }
  }

  // Canonical representative: lexicographically largest q in class order.
  const Eigen::VectorXd* chosen = &maximizers.front();
  for (const Eigen::VectorXd& q : maximizers)
    if (lex_greater(q, *chosen, 1e-9)) chosen = &q;

  report.status = distinct ? FitStatus::non_unique : FitStatus::optimal;
  report.q = to_distribution(n, *chosen);
  report.z = mobius_from_class_distribution(*report.q);
  report.likelihood = (*chosen)(static_cast<Eigen::Index>(xk)) / orbit;
  report.log_likelihood = std::log(report.likelihood);
  report.constraint_residual = problem.max_residual(*chosen);
  report.kkt_residual = best->kkt;
  return report;
}

// ---------------------------------------------------------------------------
// Exponential families

std::string to_string(ErgmFamily family) {
  switch (family) {
    case ErgmFamily::full_exchangeable: return "full_exchangeable";
    case ErgmFamily::frank_strauss: return "frank_strauss";
    case ErgmFamily::se_star: return "se_star";
    case ErgmFamily::kneser: return "kneser";
    case ErgmFamily::sem: return "sem";
    case ErgmFamily::erdos_renyi: return "erdos_renyi";
  }
  return "";
}

ErgmFamily parse_ergm_family(const std::string& text) {
  for (ErgmFamily f : {ErgmFamily::full_exchangeable, ErgmFamily::frank_strauss, ErgmFamily::se_star,
                       ErgmFamily::kneser, ErgmFamily::sem, ErgmFamily::erdos_renyi})
    if (to_string(f) == text) return f;
  throw ParseError("unknown model family '" + text + "'");
}

namespace {

void check_spec(const ErgmSpec& spec) {
  if (spec.n < 2) throw InvalidParameters("exponential families need at least two nodes");
  if (spec.n > kMaxErgmNodes) throw SizeCapExceeded("exponential-family enumeration supports n <= 6");
  if (spec.family == ErgmFamily::frank_strauss && spec.n < 3)
    throw InvalidParameters("the triangle statistic needs at least three nodes");
  if (spec.family == ErgmFamily::se_star && spec.n < 4)
    throw InvalidParameters("the disjoint-edge statistic needs at least four nodes");
}

UnlabeledClass matching_class(int k) {
  DyadMask mask = 0;
  for (int e = 0; e < k; ++e) mask |= DyadMask{1} << dyad_index(2 * e, 2 * e + 1);
  return class_of(LabeledNetwork(2 * k, mask));
}

UnlabeledClass triangle_class() { return class_of(LabeledNetwork::complete(3)); }

std::vector<std::int64_t> stats_of(const ErgmSpec& spec, const LabeledNetwork& x) {
  std::vector<std::int64_t> out;
  const DegreeDistribution dd = degree_distribution(x);
  auto stars = [&] {
    for (int k = 1; k < spec.n; ++k) out.push_back(static_cast<std::int64_t>(star_count_from_degrees(dd, k)));
  };
  switch (spec.family) {
    case ErgmFamily::full_exchangeable: {
      const ClassCatalog& cat = ClassCatalog::get(spec.n);
      const std::size_t xk = cat.index_of(x);
      for (std::size_t u = 1; u < cat.size(); ++u) out.push_back(cat.sigma(u, xk));
      break;
    }
    case ErgmFamily::frank_strauss:
      stars();
      out.push_back(static_cast<std::int64_t>(sigma(triangle_class(), x)));
      break;
    case ErgmFamily::se_star:
      stars();
      out.push_back(static_cast<std::int64_t>(two_disjoint_edges_from_degrees(dd)));
      break;
    case ErgmFamily::kneser:
      for (int k = 1; 2 * k <= spec.n; ++k) out.push_back(static_cast<std::int64_t>(sigma(matching_class(k), x)));
      break;
    case ErgmFamily::sem:
      for (int j = 1; j < spec.n; ++j) out.push_back(dd.counts[static_cast<std::size_t>(j)]);
      break;
    case ErgmFamily::erdos_renyi:
      out.push_back(x.edge_count());
      break;
  }
  return out;
}

// Statistics of every class representative, with orbit sizes.
struct ClassTable {
  Eigen::MatrixXd stats;  // classes x statistics
  Eigen::VectorXd log_orbit;
};

ClassTable class_table(const ErgmSpec& spec) {
  const ClassCatalog& cat = ClassCatalog::get(spec.n);
  const std::size_t d = ergm_stat_names(spec).size();
  ClassTable t{Eigen::MatrixXd(static_cast<Eigen::Index>(cat.size()), static_cast<Eigen::Index>(d)),
               Eigen::VectorXd(static_cast<Eigen::Index>(cat.size()))};
  for (std::size_t w = 0; w < cat.size(); ++w) {
    const auto s = stats_of(spec, cat.representative(w));
    for (std::size_t j = 0; j < d; ++j)
      t.stats(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(j)) = static_cast<double>(s[j]);
    t.log_orbit(static_cast<Eigen::Index>(w)) = std::log(static_cast<double>(cat.orbit_size(w)));
  }
  return t;
}

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Class probabilities under nu and the log normalising constant.
double class_weights(const ClassTable& t, const Eigen::VectorXd& nu, Eigen::VectorXd& weights) {
  const Eigen::VectorXd logits = t.log_orbit + t.stats * nu;
  const double shift = logits.maxCoeff();
  weights = (logits.array() - shift).exp();
  const double total = weights.sum();
  weights /= total;
  return shift + std::log(total);
}

void check_nu(const ErgmSpec& spec, const std::vector<double>& nu) {
  if (nu.size() != ergm_stat_names(spec).size())
    throw InvalidParameters("expected " + std::to_string(ergm_stat_names(spec).size()) + " canonical parameters for " +
                            to_string(spec.family) + ", got " + std::to_string(nu.size()));
  for (double v : nu)
    if (!std::isfinite(v)) throw InvalidParameters("canonical parameters must be finite");
}

// The maximum likelihood estimate exists iff the observed statistics are a
// strictly positive mixture of all class statistics (relative interior of the
// convex support). Decided exactly: maximise t with q_w = t + r_w, r_w >= 0.
bool in_relative_interior(const ClassTable& t, const Eigen::VectorXd& observed) {
  const auto classes = static_cast<std::size_t>(t.stats.rows());
  const auto d = static_cast<std::size_t>(t.stats.cols());
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(classes + 1, Rational(0)));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    Rational column_sum(0);
    for (std::size_t w = 0; w < classes; ++w) {
      const Rational s(t.stats(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(j)));
      a[j][w] = s;
      column_sum += s;
    }
    a[j][classes] = column_sum;
    b[j] = Rational(observed(static_cast<Eigen::Index>(j)));
  }
  for (std::size_t w = 0; w < classes; ++w) a[d][w] = 1;
  a[d][classes] = static_cast<unsigned long>(classes);
  b[d] = 1;
  std::vector<Rational> cost(classes + 1, Rational(0));
  cost[classes] = -1;
  const LpResult<Rational> lp = solve_lp(a, b, cost);
  return lp.status == LpStatus::optimal && sgn(lp.x[classes]) > 0;
}

}  // namespace

std::vector<std::string> ergm_stat_names(const ErgmSpec& spec) {
  check_spec(spec);
  std::vector<std::string> names;
  auto stars = [&] {
    for (int k = 1; k < spec.n; ++k) names.push_back("star" + std::to_string(k));
  };
  switch (spec.family) {
    case ErgmFamily::full_exchangeable: {
      const ClassCatalog& cat = ClassCatalog::get(spec.n);
      for (std::size_t u = 1; u < cat.size(); ++u) names.push_back(cat[u].key());
      break;
    }
    case ErgmFamily::frank_strauss:
      stars();
      names.push_back("triangle");
      break;
    case ErgmFamily::se_star:
      stars();
      names.push_back("two_disjoint_edges");
      break;
    case ErgmFamily::kneser:
      for (int k = 1; 2 * k <= spec.n; ++k) names.push_back("matching" + std::to_string(k));
      break;
    case ErgmFamily::sem:
      for (int j = 1; j < spec.n; ++j) names.push_back("degree" + std::to_string(j));
      break;
    case ErgmFamily::erdos_renyi:
      names.push_back("edges");
      break;
  }
  return names;
}

std::vector<std::int64_t> ergm_stats(const ErgmSpec& spec, const LabeledNetwork& x) {
  check_spec(spec);
  if (x.n() != spec.n) throw InvalidParameters("network has " + std::to_string(x.n()) + " nodes, model has " + std::to_string(spec.n));
  return stats_of(spec, x);
}

double ergm_log_partition(const ErgmSpec& spec, const std::vector<double>& nu) {
  check_spec(spec);
  check_nu(spec, nu);
  Eigen::VectorXd weights;
  return class_weights(class_table(spec), as_vector(nu), weights);
}

double ergm_eval(const ErgmSpec& spec, const std::vector<double>& nu, const LabeledNetwork& x) {
  const auto s = ergm_stats(spec, x);
  const double psi = ergm_log_partition(spec, nu);
  double exponent = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) exponent += nu[j] * static_cast<double>(s[j]);
  return std::exp(exponent - psi);
}

ClassDistribution<double> ergm_class_distribution(const ErgmSpec& spec, const std::vector<double>& nu) {
  check_spec(spec);
  check_nu(spec, nu);
  Eigen::VectorXd weights;
  class_weights(class_table(spec), as_vector(nu), weights);
  return ClassDistribution<double>{spec.n, std::vector<double>(weights.data(), weights.data() + weights.size())};
}

FitReport ergm_fit(const ErgmSpec& spec, const LabeledNetwork& x, const ErgmFitOptions& options) {
  const auto observed_int = ergm_stats(spec, x);
  const ClassTable table = class_table(spec);
  const auto d = static_cast<Eigen::Index>(observed_int.size());
  Eigen::VectorXd observed(d);
  for (Eigen::Index j = 0; j < d; ++j) observed(j) = static_cast<double>(observed_int[static_cast<std::size_t>(j)]);

  FitReport report;
  report.family = to_string(spec.family);
  report.statistic_names = ergm_stat_names(spec);
  report.observed.assign(observed.data(), observed.data() + d);

  auto loglik = [&](const Eigen::VectorXd& nu) {
    Eigen::VectorXd w;
    return nu.dot(observed) - class_weights(table, nu, w);
  };

  const bool interior = in_relative_interior(table, observed);

  Eigen::VectorXd nu = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd weights;
  report.status = FitStatus::failed;
  for (int it = 0; it < options.max_iterations; ++it) {
    report.iterations = it;
    class_weights(table, nu, weights);
    const Eigen::VectorXd mean = table.stats.transpose() * weights;
    const Eigen::VectorXd gradient = observed - mean;
    report.gradient_norm = gradient.norm();
    if (report.gradient_norm < options.gradient_tolerance) {
      report.status = nu.norm() > options.boundary_norm ? FitStatus::boundary : FitStatus::optimal;
      break;
    }
    if (nu.norm() > options.boundary_norm && report.gradient_norm < options.boundary_gradient) {
      report.status = FitStatus::boundary;
      break;
    }
    const Eigen::MatrixXd centred = table.stats.rowwise() - mean.transpose();
    const Eigen::MatrixXd cov = centred.transpose() * weights.asDiagonal() * centred;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    const double top = eig.eigenvalues().cwiseAbs().maxCoeff();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j)
      if (eig.eigenvalues()(j) > 1e-12 * top) inv(j) = 1.0 / eig.eigenvalues()(j);
    Eigen::VectorXd direction = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose() * gradient;
    if (direction.squaredNorm() == 0.0) direction = gradient;

    // Newton step, halved until it improves; doubled while it keeps improving,
    // which lets the iterates run off quickly when the maximum is at infinity.
    const double current = loglik(nu);
    double t = 1.0;
    double value = loglik(nu + t * direction);
    int halvings = 0;
    while (!(value > current) && halvings < 60) {
      t *= 0.5;
      value = loglik(nu + t * direction);
      ++halvings;
    }
    if (!(value > current)) {
      // No ascent possible in floating point: either converged or stuck on a boundary ray.
      report.status = nu.norm() > options.boundary_norm ? FitStatus::boundary
                      : report.gradient_norm < 1e-8 ? FitStatus::optimal
                                                    : FitStatus::failed;
      break;
    }
    if (halvings == 0) {
      for (int k = 0; k < 40; ++k) {
        const double bigger = loglik(nu + 2.0 * t * direction);
        if (!(bigger > value)) break;
        t *= 2.0;
        value = bigger;
      }
    }
    nu += t * direction;
  }

  // Without an interior point the supremum is approached only as nu diverges.
  if (!interior) report.status = FitStatus::boundary;
  class_weights(table, nu, weights);
  report.nu.assign(nu.data(), nu.data() + d);
  report.log_likelihood = loglik(nu);
  report.likelihood = std::exp(report.log_likelihood);
  report.gradient_norm = (observed - table.stats.transpose() * weights).norm();
  report.q = ClassDistribution<double>{spec.n, std::vector<double>(weights.data(), weights.data() + weights.size())};
  report.z = mobius_from_class_distribution(*report.q);
  return report;
}

// ---------------------------------------------------------------------------
// Degree distributions

std::vector<CollisionGroup> degree_collision_classes(int n) {
  if (n < 1 || n > kMaxCatalogNodes) throw SizeCapExceeded("degree collisions are enumerated for n <= 7");
  const ClassCatalog& cat = ClassCatalog::get(n);
  std::map<DegreeDistribution, std::vector<std::size_t>> groups;
  for (std::size_t w = 0; w < cat.size(); ++w) groups[degree_distribution(cat.representative(w))].push_back(w);
  std::vector<CollisionGroup> out;
  for (auto& [dd, members] : groups)
    if (members.size() >= 2) out.push_back({dd, members});
  std::sort(out.begin(), out.end(),
            [](const CollisionGroup& a, const CollisionGroup& b) { return a.classes.front() < b.classes.front(); });
  return out;
}

DegreeFunctionCheck sigma_is_degree_function(const UnlabeledClass& u, int n) {
  if (n < 1 || n > kMaxCatalogNodes) throw SizeCapExceeded("degree-function checks support n <= 7");
  const ClassCatalog& cat = ClassCatalog::get(n);
  DegreeFunctionCheck result;
  const auto uk = cat.find(u);
  if (!uk) return result;  // U does not fit on n nodes: sigma is identically zero
  for (const CollisionGroup& g : degree_collision_classes(n)) {
    const std::size_t a = g.classes.front();
    for (std::size_t k = 1; k < g.classes.size(); ++k) {
      const std::size_t b = g.classes[k];
      if (cat.sigma(*uk, a) != cat.sigma(*uk, b)) {
        result.is_function = false;
        result.witness = std::make_pair(cat.representative(a), cat.representative(b));
        return result;
      }
    }
  }
  return result;
}

std::vector<SummarizedConstraint> summarized_constraints(int n) {
  if (n > kMaxErgmNodes) throw SizeCapExceeded("summarized constraints support n <= 6");
  const ClassCatalog& cat = ClassCatalog::get(n);
  std::vector<SummarizedConstraint> out;
  auto coefficient = [&](std::size_t u, std::size_t x) {
    const std::uint64_t r = cat.r(u, x);
    if (r == 0 || cat.edge_count(u) < cat.edge_count(x)) return Rational(0);
    Rational c(static_cast<unsigned long>(r));
    return (cat.edge_count(u) - cat.edge_count(x)) % 2 == 0 ? c : Rational(-c);
  };
  for (const CollisionGroup& g : degree_collision_classes(n)) {
    const std::size_t a = g.classes.front();
    for (std::size_t k = 1; k < g.classes.size(); ++k) {
      const std::size_t b = g.classes[k];
      SummarizedConstraint c{a, b, std::vector<Rational>(cat.size()), std::vector<Rational>(cat.size())};
      for (std::size_t u = 0; u < cat.size(); ++u) c.z_coefficients[u] = coefficient(u, a) - coefficient(u, b);
      c.q_coefficients[a] = Rational(1, static_cast<unsigned long>(cat.orbit_size(a)));
      c.q_coefficients[b] = -Rational(1, static_cast<unsigned long>(cat.orbit_size(b)));
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace exnet
