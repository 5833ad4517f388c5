#pragma once

// Generative network models: Erdos-Renyi, the beta model, the marginal beta
// model (beta model with exchangeable random node parameters) and graphons.

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exnet/mobius.hpp"
#include "exnet/random.hpp"

namespace exnet {

/// e^s / (1 + e^s), written this way so that equal node parameters reproduce
/// the Erdos-Renyi tie probability bit for bit.
inline double tie_probability(double s) {
  if (s > 700.0) return 1.0;
  const double e = std::exp(s);
  return e / (1.0 + e);
}

/// Independent dyads with tie probability p[d] for dyad d.
template <class T>
JointTable<T> independent_dyads(int n, const std::vector<T>& p) {
  check_lattice_size(n);
  const int m = dyad_count(n);
  JointTable<T> jt{n, std::vector<T>(std::size_t{1} << m, T(1))};
  for (std::size_t x = 0; x < jt.probs.size(); ++x)
    for (int d = 0; d < m; ++d) {
      const T& pd = p[static_cast<std::size_t>(d)];
      jt.probs[x] *= ((x >> d) & 1U) ? pd : T(T(1) - pd);
    }
  return jt;
}

template <class T>
JointTable<T> er_joint(int n, const T& p) {
  return independent_dyads(n, std::vector<T>(static_cast<std::size_t>(dyad_count(n)), p));
}

/// p_ij = e^{b_i + b_j} / (1 + e^{b_i + b_j}).
JointTable<double> beta_joint(const std::vector<double>& beta);
/// Exact variant parametrised by node odds a_i = e^{b_i}: p_ij = a_i a_j / (1 + a_i a_j).
JointTable<Rational> beta_joint_odds(const std::vector<Rational>& odds);

struct MixingSpec {
  enum class Kind { point_mass, two_point, gaussian };
  Kind kind = Kind::point_mass;
  double beta_a = 0.0;
  double beta_b = 0.0;
  double weight = 1.0;  // probability of beta_a
  double mu = 0.0;
  double sigma = 1.0;
  int mc_samples = 1000;
  std::uint64_t seed = 0;

  static MixingSpec point_mass(double b);
  static MixingSpec two_point(double a, double b, double weight);
  static MixingSpec gaussian(double mu, double sigma, int samples, std::uint64_t seed);
  void validate() const;
  double draw(SplitMix64& rng) const;
};

struct MarginalBetaJoint {
  JointTable<double> joint;
  double standard_error = 0.0;  // largest per-configuration Monte Carlo error; 0 for exact kinds
};

/// Mixture of beta models over i.i.d. node parameters. Point and two-point
/// mixing sum over all 2^n atoms (n <= 5); gaussian mixing is Monte Carlo.
MarginalBetaJoint marginal_beta_joint(int n, const MixingSpec& mix);

/// Exact two-point mixing in odds form: node odds are odds_a with probability
/// `weight`, odds_b otherwise.
JointTable<Rational> marginal_beta_joint_exact(int n, const Rational& odds_a, const Rational& odds_b,
                                               const Rational& weight);

class Graphon {
 public:
  enum class Kind { constant, product_logistic, grid, function };

  static Graphon constant(double eta);
  /// phi(u, v) = a(u) a(v) / (1 + a(u) a(v)) with log a(u) = mu + sigma * Phi^{-1}(u),
  /// the graphon of the marginal beta model with gaussian node parameters.
  static Graphon product_logistic(double mu, double sigma);
  /// Values at the grid points (i/(r-1), j/(r-1)), bilinear in between.
  static Graphon grid(std::vector<std::vector<double>> values);
  static Graphon function(std::function<double(double, double)> f, std::string name = "function");

  /// `const:eta`, `product:logistic:mu,sigma`, or the path of a grid file.
  static Graphon parse(const std::string& spec);
  /// Grid text: first line r, then r rows of r values.
  static Graphon parse_grid(const std::string& text);

  double operator()(double u, double v) const { return eval_(u, v); }
  Kind kind() const { return kind_; }
  std::optional<double> constant_value() const;
  const std::string& name() const { return name_; }

 private:
  Graphon(Kind kind, std::string name, std::function<double(double, double)> eval, double eta = 0.0)
      : kind_(kind), name_(std::move(name)), eval_(std::move(eval)), eta_(eta) {}

  Kind kind_;
  std::string name_;
  std::function<double(double, double)> eval_;
  double eta_;
};

struct MixtureOfGraphons {
  std::vector<std::pair<double, Graphon>> components;
  void validate() const;
};

LabeledNetwork graphon_sample(const Graphon& phi, int n, std::uint64_t seed);
LabeledNetwork graphon_sample(const MixtureOfGraphons& mix, int n, std::uint64_t seed);

struct GraphonZOptions {
  enum class Method { quadrature, monte_carlo };
  Method method = Method::quadrature;
  int resolution = 64;
  int samples = 100000;
  std::uint64_t seed = 0;
  /// Work limit for quadrature (grid points touched per elimination step).
  double max_cost = 4e8;
};

struct GraphonZ {
  double value = 0.0;
  /// Quadrature: |Q_r - Q_{r/2}|. Monte Carlo: standard error. Zero when exact.
  double error = 0.0;
  std::string method;
};

/// z_U = integral over [0,1]^{|V_U|} of prod_{ij in U} phi(u_i, u_j).
GraphonZ graphon_z(const Graphon& phi, const UnlabeledClass& u, const GraphonZOptions& options = {});
GraphonZ graphon_z(const MixtureOfGraphons& mix, const UnlabeledClass& u, const GraphonZOptions& options = {});

/// All class moments on n nodes; `max_error` collects the largest error bound.
MobiusVector<double> graphon_moments(const Graphon& phi, int n, const GraphonZOptions& options = {},
                                     double* max_error = nullptr);

struct ErDiagnostic {
  double eta = 0.0;
  double max_deviation = 0.0;  // max_U |z_U - eta^{|E(U)|}|
  double edge_residual = 0.0;
  double two_star_residual = 0.0;
  double four_cycle_residual = 0.0;
  double tolerance = 0.0;
  bool consistent_with_er = true;
};

/// Compares moments with those of Erdos-Renyi(eta). Needs n >= 4.
ErDiagnostic er_characterization_diagnostic(const MobiusVector<double>& mv, double eta, double tolerance = 1e-12);
ErDiagnostic er_characterization_diagnostic(const Graphon& phi, double eta, const GraphonZOptions& options = {});

std::vector<LabeledNetwork> sample_er(int n, double p, std::uint64_t seed, int count);
std::vector<LabeledNetwork> sample_beta(const std::vector<double>& beta, std::uint64_t seed, int count);
std::vector<LabeledNetwork> sample_marginal_beta(int n, const MixingSpec& mix, std::uint64_t seed, int count);
std::vector<LabeledNetwork> sample_graphon(const Graphon& phi, int n, std::uint64_t seed, int count);

}  // namespace exnet
