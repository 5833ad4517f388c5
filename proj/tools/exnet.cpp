// exnet: command-line front end for the exchangeable network library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exnet/consistency.hpp"
#include "exnet/dependence.hpp"
#include "exnet/estimation.hpp"
#include "exnet/genmodels.hpp"
#include "exnet/golden.hpp"
#include "exnet/reports.hpp"

using namespace exnet;

namespace {

enum ExitCode { kOk = 0, kParse = 1, kInvalid = 2, kSizeCap = 3, kChecksFailed = 4, kInternal = 5 };

struct Config {
  bool use_float = false;
  std::string output;
  double tolerance = 1e-9;
  std::optional<std::uint64_t> seed;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidParameters("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void json(const Json& doc) { stream() << doc.dump(2) << "\n"; }

 private:
  std::ofstream file_;
};

std::uint64_t require_seed(const Config& cfg, const std::string& what) {
  if (!cfg.seed) throw InvalidParameters(what + " is stochastic and needs --seed");
  return *cfg.seed;
}

MixingSpec parse_mixing(const std::string& text, std::uint64_t seed) {
  auto numbers = [&](const std::string& body) {
    std::vector<double> v;
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(to_double(parse_rational(item)));
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("mixing must be point:b, two-point:a,b,w or gaussian:mu,sigma[,samples]");
  const std::string kind = text.substr(0, colon);
  const std::vector<double> v = numbers(text.substr(colon + 1));
  if (kind == "point" && v.size() == 1) return MixingSpec::point_mass(v[0]);
  if (kind == "two-point" && v.size() == 3) return MixingSpec::two_point(v[0], v[1], v[2]);
  if (kind == "gaussian" && (v.size() == 2 || v.size() == 3))
    return MixingSpec::gaussian(v[0], v[1], v.size() == 3 ? static_cast<int>(v[2]) : 1000, seed);
  throw ParseError("cannot read mixing distribution '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(to_double(parse_rational(item)));
  if (v.empty()) throw ParseError("empty list");
  return v;
}

void write_samples(Output& out, const std::vector<LabeledNetwork>& samples) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k) out.stream() << "\n";
    out.stream() << "# sample " << k + 1 << "\n" << format_edge_list(samples[k]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchangeable random networks: Moebius parameters, estimation, Markov structure"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_flag("--float", cfg.use_float, "Floating-point arithmetic instead of exact rationals");
  app.add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  app.add_option("--tolerance", cfg.tolerance, "Tolerance for floating-point checks");

  std::string edgelist, family_name, nu_path, joint_path, dep_path, z_path, graphon_spec, class_key;
  int m = 0, n = 0, count = 1, restarts = 32, ext_restarts = 8, resolution = 64, samples = 100000;
  double p = 0.5;
  std::string beta_list, mixing, method = "quadrature";
  bool dissociated = false;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) { cfg.seed = s; }, "Random seed");
  };

  auto* stats = app.add_subcommand("stats", "Subgraph counts, degrees and family statistics");
  stats->add_option("edgelist", edgelist)->required();

  auto* mle = app.add_subcommand("mle", "Exchangeable maximum likelihood Moebius parameters");
  mle->add_option("edgelist", edgelist)->required();

  auto* mle_d = app.add_subcommand("mle-dissociated", "Dissociated exchangeable maximum likelihood");
  mle_d->add_option("edgelist", edgelist)->required();
  mle_d->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  add_seed(mle_d);

  auto* fit = app.add_subcommand("fit", "Exponential-family maximum likelihood");
  fit->add_option("family", family_name)->required();
  fit->add_option("edgelist", edgelist)->required();

  auto* eval = app.add_subcommand("eval", "Probability of a network under an exponential family");
  eval->add_option("family", family_name)->required();
  eval->add_option("nu", nu_path)->required();
  eval->add_option("edgelist", edgelist)->required();

  auto* markov = app.add_subcommand("markov", "Global Markov property check");
  markov->add_option("joint", joint_path)->required();
  markov->add_option("dependence", dep_path)->required();

  auto* skel = app.add_subcommand("skeleton", "Dependence skeleton of a joint distribution");
  skel->add_option("joint", joint_path)->required();

  auto* extend = app.add_subcommand("extend", "Extendability of exchangeable Moebius parameters");
  extend->add_option("z", z_path)->required();
  extend->add_option("--m", m)->required();
  extend->add_flag("--dissociated", dissociated);
  extend->add_option("--restarts", ext_restarts)->check(CLI::PositiveNumber);
  add_seed(extend);

  auto* sample = app.add_subcommand("sample", "Seeded samples as edge lists");
  sample->require_subcommand(1);
  sample->fallthrough();
  auto* s_er = sample->add_subcommand("er", "Erdos-Renyi");
  s_er->add_option("--n", n)->required();
  s_er->add_option("--p", p)->required();
  auto* s_beta = sample->add_subcommand("beta", "Beta model");
  s_beta->add_option("--beta", beta_list, "Comma-separated node parameters")->required();
  auto* s_mb = sample->add_subcommand("marginal-beta", "Beta model with i.i.d. node parameters");
  s_mb->add_option("--n", n)->required();
  s_mb->add_option("--mixing", mixing, "point:b | two-point:a,b,w | gaussian:mu,sigma")->required();
  auto* s_graphon = sample->add_subcommand("graphon", "Graphon");
  s_graphon->add_option("--n", n)->required();
  s_graphon->add_option("--graphon", graphon_spec, "const:eta | product:logistic:mu,sigma | grid file")->required();
  for (CLI::App* s : {s_er, s_beta, s_mb, s_graphon}) {
    add_seed(s);
    s->add_option("--count", count)->check(CLI::PositiveNumber);
  }

  auto* gz = app.add_subcommand("graphon-z", "Moebius parameter of a graphon");
  gz->add_option("graphon", graphon_spec)->required();
  gz->add_option("class", class_key)->required();
  gz->add_option("--method", method)->check(CLI::IsMember({"quadrature", "monte-carlo"}));
  gz->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
  gz->add_option("--samples", samples)->check(CLI::PositiveNumber);
  add_seed(gz);

  auto* coll = app.add_subcommand("collisions", "Classes sharing a degree distribution");
  coll->add_option("--n", n)->required();

  auto* golden = app.add_subcommand("paper-examples", "Run the worked-example battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    Output out(cfg.output);
    if (*stats) {
      out.json(stats_report(read_edge_list(edgelist)));
    } else if (*mle) {
      out.json(mle_report(read_edge_list(edgelist), cfg.use_float));
    } else if (*mle_d) {
      DissociatedOptions opts;
      opts.restarts = restarts;
      if (cfg.seed) opts.seed = *cfg.seed;
      out.json(to_json(dissociated_mle(read_edge_list(edgelist), opts)));
    } else if (*fit) {
      const LabeledNetwork g = read_edge_list(edgelist);
      out.json(to_json(ergm_fit({parse_ergm_family(family_name), g.n()}, g)));
    } else if (*eval) {
      out.json(eval_report(parse_ergm_family(family_name), read_json_file(nu_path), read_edge_list(edgelist)));
    } else if (*markov) {
      out.json(markov_report(read_json_file(joint_path), read_json_file(dep_path), cfg.use_float, cfg.tolerance));
    } else if (*skel) {
      out.json(skeleton_report(read_json_file(joint_path), cfg.use_float, cfg.tolerance));
    } else if (*extend) {
      ExtendRequest req;
      req.m = m;
      req.dissociated = dissociated;
      req.use_float = cfg.use_float;
      req.tolerance = cfg.tolerance;
      req.restarts = ext_restarts;
      req.seed = cfg.seed;
      out.json(extend_report(read_json_file(z_path), req));
    } else if (*sample) {
      if (*s_er) {
        write_samples(out, sample_er(n, p, require_seed(cfg, "sample er"), count));
      } else if (*s_beta) {
        write_samples(out, sample_beta(parse_list(beta_list), require_seed(cfg, "sample beta"), count));
      } else if (*s_mb) {
        const std::uint64_t s = require_seed(cfg, "sample marginal-beta");
        write_samples(out, sample_marginal_beta(n, parse_mixing(mixing, s), s, count));
      } else {
        write_samples(out, sample_graphon(Graphon::parse(graphon_spec), n, require_seed(cfg, "sample graphon"), count));
      }
    } else if (*gz) {
      GraphonZOptions opts;
      opts.resolution = resolution;
      opts.samples = samples;
      if (method == "monte-carlo") {
        opts.method = GraphonZOptions::Method::monte_carlo;
        opts.seed = require_seed(cfg, "graphon-z --method monte-carlo");
      }
      out.json(graphon_z_report(graphon_spec, class_key, opts));
    } else if (*coll) {
      out.json(to_json(degree_collision_classes(n), n));
    } else if (*golden) {
      int failed = 0;
      for (const GoldenItem& item : run_golden_examples()) {
        out.stream() << (item.passed ? "PASS " : "FAIL ") << item.name << ": " << item.detail << "\n";
        if (!item.passed) ++failed;
      }
      return failed ? kChecksFailed : kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidParameters& e) {
    Json report = {{"error", "invalid parameters"}, {"message", e.what()}};
    if (e.configuration() >= 0) report["configuration"] = e.configuration();
    std::cerr << report.dump(2) << "\n";
    return kInvalid;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return kSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json({{"error", "invalid parameters"}, {"message", e.what()}}).dump(2) << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
