#include "exnet/reports.hpp"

#include <cmath>

#include "exnet/homcount.hpp"

namespace exnet {

Json stats_report(const LabeledNetwork& g) {
  if (g.n() > kMaxCatalogNodes)
    throw SizeCapExceeded("class statistics are enumerated for at most " + std::to_string(kMaxCatalogNodes) + " nodes");
  const ClassCatalog& cat = ClassCatalog::get(g.n());
  Json counts = Json::object();
  for (std::size_t u = 1; u < cat.size(); ++u) counts[cat[u].key()] = sigma(cat[u], g);
  Json out = {{"n", g.n()}, {"edge_count", g.edge_count()}, {"sigma", counts}};
  out["degrees"] = g.degrees();
  out["degree_distribution"] = degree_distribution(g).counts;
  Json families = Json::object();
  if (g.n() <= kMaxErgmNodes) {
    for (ErgmFamily f :
         {ErgmFamily::frank_strauss, ErgmFamily::se_star, ErgmFamily::kneser, ErgmFamily::sem, ErgmFamily::erdos_renyi}) {
      const ErgmSpec spec{f, g.n()};
      const auto names = ergm_stat_names(spec);
      const auto values = ergm_stats(spec, g);
      Json fam = Json::object();
      for (std::size_t j = 0; j < names.size(); ++j) fam[names[j]] = values[j];
      families[to_string(f)] = fam;
    }
  }
  out["families"] = families;
  return out;
}

Json mle_report(const LabeledNetwork& g, bool use_float) {
  const MobiusVector<Rational> z = exch_mle(g);
  return use_float ? to_json(to_double(z)) : to_json(z);
}

Json eval_report(ErgmFamily family, const Json& nu_doc, const LabeledNetwork& g) {
  const ErgmSpec spec{family, g.n()};
  const auto names = ergm_stat_names(spec);
  const std::vector<double> nu = nu_from_json(nu_doc, names);
  if (nu.size() != names.size())
    throw InvalidParameters("expected " + std::to_string(names.size()) + " canonical parameters, got " +
                            std::to_string(nu.size()));
  const double prob = ergm_eval(spec, nu, g);
  const auto values = ergm_stats(spec, g);
  Json st = Json::object();
  for (std::size_t j = 0; j < names.size(); ++j) st[names[j]] = values[j];
  return {{"family", to_string(family)},
          {"n", g.n()},
          {"statistics", st},
          {"probability", prob},
          {"log_probability", scalar_json(std::log(prob))}};
}

namespace {

ParsedJoint checked_joint(const Json& doc, double tol) {
  ParsedJoint jt = joint_from_json(doc);
  Rational total = 0;
  for (std::size_t x = 0; x < jt.exact.probs.size(); ++x) {
    if (jt.exact.probs[x] < 0) throw InvalidParameters("negative probability", static_cast<long long>(x));
    total += jt.exact.probs[x];
  }
  const bool ok = jt.all_exact ? total == 1 : std::abs(to_double(total) - 1.0) <= tol;
  if (!ok) throw InvalidParameters("probabilities sum to " + to_string(total) + ", not 1");
  return jt;
}

}  // namespace

Json markov_report(const Json& joint, const Json& dependence, bool use_float, double tol) {
  const ParsedJoint jt = checked_joint(joint, tol);
  const DependenceGraph dep = dependence_graph_from_json(dependence);
  if (dep.n != jt.exact.n) throw InvalidParameters("joint and dependence graph have different node counts");
  const bool exact = jt.all_exact && !use_float;
  const MarkovCheck check = exact ? global_markov_check(jt.exact, dep) : global_markov_check(to_double(jt.exact), dep, tol);
  Json doc = to_json(check);
  doc["arithmetic"] = exact ? "rational" : "float";
  return doc;
}

namespace {

template <class T>
Json skeleton_json(const JointTable<T>& jt, double tol) {
  const DependenceGraph sk = skeleton(jt, tol);
  return {{"skeleton", to_json(sk)}, {"classification", to_string(classify_skeleton(sk))}};
}

}  // namespace

Json skeleton_report(const Json& joint, bool use_float, double tol) {
  const ParsedJoint jt = checked_joint(joint, tol);
  const bool exact = jt.all_exact && !use_float;
  Json doc = exact ? skeleton_json(jt.exact, 0.0) : skeleton_json(to_double(jt.exact), tol);
  doc["arithmetic"] = exact ? "rational" : "float";
  return doc;
}

Json extend_report(const Json& z_doc, const ExtendRequest& request) {
  const ParsedMobius z = mobius_from_json(z_doc);
  const auto validation = validate_mobius(z.exact);
  if (!validation.ok)
    throw InvalidParameters("not a Moebius vector on " + std::to_string(z.exact.n) + " nodes: " + validation.message,
                            validation.configuration ? static_cast<long long>(*validation.configuration) : -1);
  if (request.dissociated) {
    DissociatedExtensionOptions opts;
    opts.restarts = request.restarts;
    if (request.seed) opts.seed = *request.seed;
    opts.feasibility_tolerance = request.tolerance;
    return to_json(dissociated_extendable_check(z.approx(), request.m, opts));
  }
  if (z.all_exact && !request.use_float) return to_json(extendable_check(z.exact, request.m));
  return to_json(extendable_check(z.approx(), request.m, request.tolerance));
}

Json graphon_z_report(const std::string& graphon, const std::string& class_key, const GraphonZOptions& options) {
  const Graphon phi = Graphon::parse(graphon);
  const UnlabeledClass u = parse_class_key(class_key);
  Json doc = {{"graphon", phi.name()}, {"class", u.key()}};
  doc.update(to_json(graphon_z(phi, u, options)));
  return doc;
}

Json networks_json(const std::vector<LabeledNetwork>& networks) {
  Json out = Json::array();
  for (const LabeledNetwork& g : networks) {
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
    out.push_back({{"n", g.n()}, {"edges", edges}});
  }
  return out;
}

}  // namespace exnet
