#include "exnet/genmodels.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/math/distributions/normal.hpp>

namespace exnet {

namespace {

std::vector<double> beta_probabilities(const std::vector<double>& beta) {
  const int n = static_cast<int>(beta.size());
  std::vector<double> p(static_cast<std::size_t>(dyad_count(n)));
  for (int d = 0; d < dyad_count(n); ++d) {
    const Dyad dy = dyad_at(d);
    p[static_cast<std::size_t>(d)] = tie_probability(beta[static_cast<std::size_t>(dy.i)] + beta[static_cast<std::size_t>(dy.j)]);
  }
  return p;
}

void check_beta(const std::vector<double>& beta) {
  if (beta.empty()) throw InvalidParameters("the beta model needs at least one node");
  for (double b : beta)
    if (!std::isfinite(b)) throw InvalidParameters("node parameters must be finite");
}

LabeledNetwork sample_independent(int n, const std::vector<double>& p, SplitMix64& rng) {
  DyadMask mask = 0;
  for (int d = 0; d < dyad_count(n); ++d)
    if (rng.bernoulli(p[static_cast<std::size_t>(d)])) mask |= DyadMask{1} << d;
  return LabeledNetwork(n, mask);
}

void check_sample_args(int n, int count) {
  if (n < 1 || n > kMaxNodes) throw InvalidParameters("node count must be between 1 and 8");
  if (count < 0) throw InvalidParameters("sample count must be nonnegative");
}

}  // namespace

JointTable<double> beta_joint(const std::vector<double>& beta) {
  check_beta(beta);
  return independent_dyads(static_cast<int>(beta.size()), beta_probabilities(beta));
}

JointTable<Rational> beta_joint_odds(const std::vector<Rational>& odds) {
  const int n = static_cast<int>(odds.size());
  if (n == 0) throw InvalidParameters("the beta model needs at least one node");
  for (const Rational& a : odds)
    if (sgn(a) <= 0) throw InvalidParameters("node odds must be positive");
  std::vector<Rational> p(static_cast<std::size_t>(dyad_count(n)));
  for (int d = 0; d < dyad_count(n); ++d) {
    const Dyad dy = dyad_at(d);
    const Rational s = odds[static_cast<std::size_t>(dy.i)] * odds[static_cast<std::size_t>(dy.j)];
    p[static_cast<std::size_t>(d)] = s / (1 + s);
  }
  return independent_dyads(n, p);
}

// ---------------------------------------------------------------------------
// Marginal beta

MixingSpec MixingSpec::point_mass(double b) {
  MixingSpec m;
  m.kind = Kind::point_mass;
  m.beta_a = b;
  return m;
}

MixingSpec MixingSpec::two_point(double a, double b, double weight) {
  MixingSpec m;
  m.kind = Kind::two_point;
  m.beta_a = a;
  m.beta_b = b;
  m.weight = weight;
  return m;
}

MixingSpec MixingSpec::gaussian(double mu, double sigma, int samples, std::uint64_t seed) {
  MixingSpec m;
  m.kind = Kind::gaussian;
  m.mu = mu;
  m.sigma = sigma;
  m.mc_samples = samples;
  m.seed = seed;
  return m;
}

void MixingSpec::validate() const {
  if (!std::isfinite(beta_a) || !std::isfinite(beta_b) || !std::isfinite(mu) || !std::isfinite(sigma))
    throw InvalidParameters("mixing parameters must be finite");
  if (weight < 0.0 || weight > 1.0) throw InvalidParameters("mixing weight must lie in [0, 1]");
  if (sigma < 0.0) throw InvalidParameters("mixing standard deviation must be nonnegative");
  if (mc_samples < 1) throw InvalidParameters("Monte Carlo sample count must be positive");
}

double MixingSpec::draw(SplitMix64& rng) const {
  switch (kind) {
    case Kind::point_mass: return beta_a;
    case Kind::two_point: return rng.uniform() < weight ? beta_a : beta_b;
    case Kind::gaussian: return mu + sigma * rng.normal();
  }
  return beta_a;
}

MarginalBetaJoint marginal_beta_joint(int n, const MixingSpec& mix) {
  mix.validate();
  check_lattice_size(n);
  MarginalBetaJoint out{JointTable<double>{n, std::vector<double>(std::size_t{1} << dyad_count(n), 0.0)}, 0.0};
  if (mix.kind == MixingSpec::Kind::point_mass) {
    out.joint = beta_joint(std::vector<double>(static_cast<std::size_t>(n), mix.beta_a));
    return out;
  }
  if (mix.kind == MixingSpec::Kind::two_point) {
    if (n > 5) throw SizeCapExceeded("exact two-point mixing supports n <= 5");
    for (unsigned atom = 0; atom < (1U << n); ++atom) {
      std::vector<double> beta(static_cast<std::size_t>(n));
      double w = 1.0;
      for (int i = 0; i < n; ++i) {
        const bool a = (atom >> i) & 1U;
        beta[static_cast<std::size_t>(i)] = a ? mix.beta_a : mix.beta_b;
        w *= a ? mix.weight : 1.0 - mix.weight;
      }
      if (w == 0.0) continue;
      const JointTable<double> jt = beta_joint(beta);
      for (std::size_t x = 0; x < jt.probs.size(); ++x) out.joint.probs[x] += w * jt.probs[x];
    }
    return out;
  }
  std::vector<double> second(out.joint.probs.size(), 0.0);
  for (int s = 0; s < mix.mc_samples; ++s) {
    SplitMix64 rng(split_seed(mix.seed, static_cast<std::uint64_t>(s)));
    std::vector<double> beta(static_cast<std::size_t>(n));
    for (double& b : beta) b = mix.draw(rng);
    const JointTable<double> jt = beta_joint(beta);
    for (std::size_t x = 0; x < jt.probs.size(); ++x) {
      out.joint.probs[x] += jt.probs[x];
      second[x] += jt.probs[x] * jt.probs[x];
    }
  }
  const double count = mix.mc_samples;
  for (std::size_t x = 0; x < second.size(); ++x) {
    const double mean = out.joint.probs[x] / count;
    out.joint.probs[x] = mean;
    const double var = count > 1 ? std::max(0.0, second[x] / count - mean * mean) * count / (count - 1) : 0.0;
    out.standard_error = std::max(out.standard_error, std::sqrt(var / count));
  }
  return out;
}

JointTable<Rational> marginal_beta_joint_exact(int n, const Rational& odds_a, const Rational& odds_b,
                                               const Rational& weight) {
  if (n > 5) throw SizeCapExceeded("exact two-point mixing supports n <= 5");
  if (weight < 0 || weight > 1) throw InvalidParameters("mixing weight must lie in [0, 1]");
  check_lattice_size(n);
  JointTable<Rational> out{n, std::vector<Rational>(std::size_t{1} << dyad_count(n), Rational(0))};
  for (unsigned atom = 0; atom < (1U << n); ++atom) {
    std::vector<Rational> odds(static_cast<std::size_t>(n));
    Rational w(1);
    for (int i = 0; i < n; ++i) {
      const bool a = (atom >> i) & 1U;
      odds[static_cast<std::size_t>(i)] = a ? odds_a : odds_b;
      w *= a ? weight : Rational(1 - weight);
    }
    if (sgn(w) == 0) continue;
    const JointTable<Rational> jt = beta_joint_odds(odds);
    for (std::size_t x = 0; x < jt.probs.size(); ++x) out.probs[x] += w * jt.probs[x];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphons

Graphon Graphon::constant(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidParameters("constant graphon value must lie in [0, 1]");
  return Graphon(Kind::constant, "const:" + to_string(eta), [eta](double, double) { return eta; }, eta);
}

Graphon Graphon::product_logistic(double mu, double sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma < 0.0)
    throw InvalidParameters("product graphon needs finite mu and sigma >= 0");
  const boost::math::normal_distribution<double> normal(0.0, 1.0);
  auto beta = [mu, sigma, normal](double u) {
    // The quantile diverges at 0 and 1; those points have measure zero.
    const double clamped = std::clamp(u, 1e-12, 1.0 - 1e-12);
    return mu + sigma * boost::math::quantile(normal, clamped);
  };
  return Graphon(Kind::product_logistic, "product:logistic:" + to_string(mu) + "," + to_string(sigma),
                 [beta](double u, double v) { return tie_probability(beta(u) + beta(v)); });
}

Graphon Graphon::grid(std::vector<std::vector<double>> values) {
  const std::size_t r = values.size();
  if (r < 2) throw InvalidParameters("graphon grid needs at least 2 x 2 values");
  for (const auto& row : values)
    if (row.size() != r) throw InvalidParameters("graphon grid must be square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const double v = values[i][j];
      if (!(v >= 0.0 && v <= 1.0)) throw InvalidParameters("graphon values must lie in [0, 1]");
      if (std::abs(v - values[j][i]) > 1e-12) throw InvalidParameters("graphon grid must be symmetric");
    }
  auto shared = std::make_shared<const std::vector<std::vector<double>>>(std::move(values));
  auto eval = [shared](double u, double v) {
    const auto& g = *shared;
    const double scale = static_cast<double>(g.size() - 1);
    auto locate = [&](double t, std::size_t& i, double& f) {
      const double x = std::clamp(t, 0.0, 1.0) * scale;
      i = std::min(static_cast<std::size_t>(x), g.size() - 2);
      f = x - static_cast<double>(i);
    };
    std::size_t i = 0, j = 0;
    double fu = 0.0, fv = 0.0;
    locate(u, i, fu);
    locate(v, j, fv);
    return (1 - fu) * (1 - fv) * g[i][j] + fu * (1 - fv) * g[i + 1][j] + (1 - fu) * fv * g[i][j + 1] +
           fu * fv * g[i + 1][j + 1];
  };
  return Graphon(Kind::grid, "grid:" + std::to_string(r), eval);
}

Graphon Graphon::function(std::function<double(double, double)> f, std::string name) {
  return Graphon(Kind::function, std::move(name), std::move(f));
}

std::optional<double> Graphon::constant_value() const {
  if (kind_ == Kind::constant) return eta_;
  return std::nullopt;
}

Graphon Graphon::parse_grid(const std::string& text) {
  std::istringstream in(text);
  long r = 0;
  if (!(in >> r) || r < 2 || r > 4096) throw ParseError("graphon grid must start with a size r >= 2");
  std::vector<std::vector<double>> values(static_cast<std::size_t>(r), std::vector<double>(static_cast<std::size_t>(r)));
  for (auto& row : values)
    for (double& v : row)
      if (!(in >> v)) throw ParseError("graphon grid has fewer than r*r values");
  std::string extra;
  if (in >> extra) throw ParseError("graphon grid has trailing content '" + extra + "'");
  return grid(std::move(values));
}

Graphon Graphon::parse(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + s + "' in graphon '" + spec + "'");
    }
    if (used != s.size()) throw ParseError("malformed number '" + s + "' in graphon '" + spec + "'");
    return v;
  };
  if (spec.rfind("const:", 0) == 0) return constant(number(spec.substr(6)));
  const std::string product = "product:logistic:";
  if (spec.rfind(product, 0) == 0) {
    const std::string args = spec.substr(product.size());
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("expected product:logistic:mu,sigma");
    return product_logistic(number(args.substr(0, comma)), number(args.substr(comma + 1)));
  }
  std::ifstream file(spec);
  if (!file) throw ParseError("unknown graphon '" + spec + "' (not a named form or readable grid file)");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_grid(buffer.str());
}

void MixtureOfGraphons::validate() const {
  if (components.empty()) throw InvalidParameters("graphon mixture has no components");
  double total = 0.0;
  for (const auto& [w, g] : components) {
    if (!(w >= 0.0)) throw InvalidParameters("mixture weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidParameters("mixture weights must sum to 1");
}

namespace {

LabeledNetwork sample_from(const Graphon& phi, int n, SplitMix64& rng) {
  std::vector<double> u(static_cast<std::size_t>(n));
  for (double& v : u) v = rng.uniform();
  DyadMask mask = 0;
  for (int d = 0; d < dyad_count(n); ++d) {
    const Dyad dy = dyad_at(d);
    if (rng.bernoulli(phi(u[static_cast<std::size_t>(dy.i)], u[static_cast<std::size_t>(dy.j)]))) mask |= DyadMask{1} << d;
  }
  return LabeledNetwork(n, mask);
}

}  // namespace

LabeledNetwork graphon_sample(const Graphon& phi, int n, std::uint64_t seed) {
  check_sample_args(n, 1);
  SplitMix64 rng(seed);
  return sample_from(phi, n, rng);
}

LabeledNetwork graphon_sample(const MixtureOfGraphons& mix, int n, std::uint64_t seed) {
  mix.validate();
  check_sample_args(n, 1);
  SplitMix64 rng(seed);
  const double pick = rng.uniform();
  double cumulative = 0.0;
  for (const auto& [w, g] : mix.components) {
    cumulative += w;
    if (pick < cumulative) return sample_from(g, n, rng);
  }
  return sample_from(mix.components.back().second, n, rng);
}

// ---------------------------------------------------------------------------
// Graphon moments

namespace {

// Dense factor over a sorted list of variables, each ranging over r grid points.
struct Factor {
  std::vector<int> vars;
  std::vector<double> data;
};

double trapezoid(const Graphon& phi, const LabeledNetwork& rep, int r, double max_cost) {
  std::vector<double> nodes(static_cast<std::size_t>(r));
  std::vector<double> weights(static_cast<std::size_t>(r), 1.0 / (r - 1));
  for (int i = 0; i < r; ++i) nodes[static_cast<std::size_t>(i)] = static_cast<double>(i) / (r - 1);
  weights.front() *= 0.5;
  weights.back() *= 0.5;
  std::vector<double> table(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      table[static_cast<std::size_t>(i * r + j)] = phi(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]);

  std::vector<Factor> factors;
  for (auto [a, b] : rep.edges()) factors.push_back({{a, b}, table});
  std::vector<int> remaining;
  for (int v = 0; v < rep.n(); ++v)
    if ((rep.support() >> v) & 1U) remaining.push_back(v);

  double scalar = 1.0;
  while (!remaining.empty()) {
    // Eliminate the variable whose combined factor is smallest.
    std::size_t best_pos = 0;
    std::vector<int> best_scope;
    for (std::size_t p = 0; p < remaining.size(); ++p) {
      std::vector<int> scope;
      for (const Factor& f : factors)
        if (std::find(f.vars.begin(), f.vars.end(), remaining[p]) != f.vars.end())
          scope.insert(scope.end(), f.vars.begin(), f.vars.end());
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      if (p == 0 || scope.size() < best_scope.size()) {
        best_pos = p;
        best_scope = scope;
      }
    }
    const int v = remaining[best_pos];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
    if (best_scope.empty()) continue;  // cannot happen for graphs without isolated nodes
    if (std::pow(static_cast<double>(r), static_cast<double>(best_scope.size())) > max_cost)
      throw SizeCapExceeded("graphon quadrature at resolution " + std::to_string(r) +
                            " exceeds the work limit; lower the resolution or use Monte Carlo");

    std::vector<Factor> involved;
    std::vector<Factor> rest;
    for (Factor& f : factors)
      (std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end() ? involved : rest).push_back(std::move(f));

    Factor out;
    for (int w : best_scope)
      if (w != v) out.vars.push_back(w);
    std::size_t out_size = 1;
    for (std::size_t k = 0; k < out.vars.size(); ++k) out_size *= static_cast<std::size_t>(r);
    out.data.assign(out_size, 0.0);

    const std::size_t s = best_scope.size();
    std::vector<int> idx(s, 0);
    // Position of each factor variable inside best_scope.
    std::vector<std::vector<std::size_t>> where(involved.size());
    for (std::size_t f = 0; f < involved.size(); ++f)
      for (int var : involved[f].vars)
        where[f].push_back(static_cast<std::size_t>(std::find(best_scope.begin(), best_scope.end(), var) - best_scope.begin()));
    const std::size_t v_pos = static_cast<std::size_t>(std::find(best_scope.begin(), best_scope.end(), v) - best_scope.begin());

    while (true) {
      double value = weights[static_cast<std::size_t>(idx[v_pos])];
      for (std::size_t f = 0; f < involved.size() && value != 0.0; ++f) {
        std::size_t offset = 0;
        for (std::size_t pos : where[f]) offset = offset * static_cast<std::size_t>(r) + static_cast<std::size_t>(idx[pos]);
        value *= involved[f].data[offset];
      }
      std::size_t target = 0;
      for (std::size_t pos = 0; pos < s; ++pos)
        if (pos != v_pos) target = target * static_cast<std::size_t>(r) + static_cast<std::size_t>(idx[pos]);
      out.data[target] += value;
      std::size_t k = s;
      while (k > 0 && ++idx[k - 1] == r) idx[--k] = 0;
      if (k == 0) break;
    }
    if (out.vars.empty()) {
      scalar *= out.data[0];
      factors = std::move(rest);
    } else {
      rest.push_back(std::move(out));
      factors = std::move(rest);
    }
  }
  for (const Factor& f : factors) scalar *= f.data.empty() ? 1.0 : f.data[0];
  return scalar;
}

double monte_carlo(const Graphon& phi, const LabeledNetwork& rep, int samples, std::uint64_t seed, double& error) {
  const auto edges = rep.edges();
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<double> u(static_cast<std::size_t>(rep.n()));
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng(split_seed(seed, static_cast<std::uint64_t>(s)));
    for (double& x : u) x = rng.uniform();
    double value = 1.0;
    for (auto [a, b] : edges) value *= phi(u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]);
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / samples;
  const double var = samples > 1 ? std::max(0.0, sum_sq / samples - mean * mean) * samples / (samples - 1.0) : 0.0;
  error = std::sqrt(var / samples);
  return mean;
}

}  // namespace

GraphonZ graphon_z(const Graphon& phi, const UnlabeledClass& u, const GraphonZOptions& options) {
  if (u.vertex_count() > 6) throw SizeCapExceeded("graphon moments support classes on at most 6 vertices");
  GraphonZ out;
  if (u.is_empty()) {
    out.value = 1.0;
    out.method = "exact";
    return out;
  }
  if (const auto eta = phi.constant_value()) {
    double value = 1.0;
    for (int e = 0; e < u.edge_count(); ++e) value *= *eta;
    out.value = value;
    out.method = "exact";
    return out;
  }
  const LabeledNetwork rep = u.representative();
  if (options.method == GraphonZOptions::Method::monte_carlo) {
    if (options.samples < 1) throw InvalidParameters("Monte Carlo sample count must be positive");
    out.value = monte_carlo(phi, rep, options.samples, options.seed, out.error);
    out.method = "monte_carlo";
    return out;
  }
  if (options.resolution < 4) throw InvalidParameters("quadrature resolution must be at least 4");
  out.value = trapezoid(phi, rep, options.resolution, options.max_cost);
  out.error = std::abs(out.value - trapezoid(phi, rep, options.resolution / 2, options.max_cost));
  out.method = "trapezoid";
  return out;
}

GraphonZ graphon_z(const MixtureOfGraphons& mix, const UnlabeledClass& u, const GraphonZOptions& options) {
  mix.validate();
  GraphonZ out;
  out.method = "exact";
  for (const auto& [w, g] : mix.components) {
    const GraphonZ part = graphon_z(g, u, options);
    out.value += w * part.value;
    out.error += w * part.error;
    if (part.method != "exact") out.method = part.method;
  }
  return out;
}

MobiusVector<double> graphon_moments(const Graphon& phi, int n, const GraphonZOptions& options, double* max_error) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  MobiusVector<double> mv{n, std::vector<double>(cat.size())};
  double worst = 0.0;
  for (std::size_t u = 0; u < cat.size(); ++u) {
    const GraphonZ z = graphon_z(phi, cat[u], options);
    mv.z[u] = z.value;
    worst = std::max(worst, z.error);
  }
  if (max_error) *max_error = worst;
  return mv;
}

ErDiagnostic er_characterization_diagnostic(const MobiusVector<double>& mv, double eta, double tolerance) {
  if (mv.n < 4) throw InvalidParameters("the Erdos-Renyi diagnostic needs moments on at least 4 nodes");
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  ErDiagnostic d;
  d.eta = eta;
  d.tolerance = tolerance;
  for (std::size_t u = 0; u < cat.size(); ++u) {
    double power = 1.0;
    for (int e = 0; e < cat.edge_count(u); ++e) power *= eta;
    d.max_deviation = std::max(d.max_deviation, std::abs(mv.z[u] - power));
  }
  d.edge_residual = std::abs(mv.at(class_of(LabeledNetwork::complete(2))) - eta);
  d.two_star_residual = std::abs(mv.at(class_of(LabeledNetwork::star(2))) - eta * eta);
  d.four_cycle_residual = std::abs(mv.at(class_of(LabeledNetwork::cycle(4))) - eta * eta * eta * eta);
  d.consistent_with_er = d.max_deviation <= tolerance;
  return d;
}

ErDiagnostic er_characterization_diagnostic(const Graphon& phi, double eta, const GraphonZOptions& options) {
  double error = 0.0;
  const MobiusVector<double> mv = graphon_moments(phi, 4, options, &error);
  return er_characterization_diagnostic(mv, eta, std::max(1e-12, 10.0 * error));
}

// ---------------------------------------------------------------------------
// Samplers: sample k draws from the stream split_seed(seed, k).

std::vector<LabeledNetwork> sample_er(int n, double p, std::uint64_t seed, int count) {
  check_sample_args(n, count);
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameters("tie probability must lie in [0, 1]");
  const std::vector<double> probs(static_cast<std::size_t>(dyad_count(n)), p);
  std::vector<LabeledNetwork> out;
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng(split_seed(seed, static_cast<std::uint64_t>(k)));
    out.push_back(sample_independent(n, probs, rng));
  }
  return out;
}

std::vector<LabeledNetwork> sample_beta(const std::vector<double>& beta, std::uint64_t seed, int count) {
  check_beta(beta);
  const int n = static_cast<int>(beta.size());
  check_sample_args(n, count);
  const std::vector<double> probs = beta_probabilities(beta);
  std::vector<LabeledNetwork> out;
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng(split_seed(seed, static_cast<std::uint64_t>(k)));
    out.push_back(sample_independent(n, probs, rng));
  }
  return out;
}

std::vector<LabeledNetwork> sample_marginal_beta(int n, const MixingSpec& mix, std::uint64_t seed, int count) {
  mix.validate();
  check_sample_args(n, count);
  std::vector<LabeledNetwork> out;
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng(split_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<double> beta(static_cast<std::size_t>(n));
    for (double& b : beta) b = mix.draw(rng);
    out.push_back(sample_independent(n, beta_probabilities(beta), rng));
  }
  return out;
}

std::vector<LabeledNetwork> sample_graphon(const Graphon& phi, int n, std::uint64_t seed, int count) {
  check_sample_args(n, count);
  std::vector<LabeledNetwork> out;
  for (int k = 0; k < count; ++k) out.push_back(graphon_sample(phi, n, split_seed(seed, static_cast<std::uint64_t>(k))));
  return out;
}

}  // namespace exnet
