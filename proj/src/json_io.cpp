#include "exnet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace exnet {

Rational parse_scalar(const Json& value, bool& exact) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) {
    // The shortest round-trip text of the double, read as an exact decimal.
    exact = false;
    if (!std::isfinite(value.get<double>())) throw ParseError("non-finite number");
    return parse_rational(value.dump());
  }
  throw ParseError("expected a number or a \"p/q\" string, got " + value.dump());
}

Json to_json(const DependenceGraph& dep) {
  Json edges = Json::array();
  for (auto [u, v] : dep.edges()) edges.push_back({dyad_label(u), dyad_label(v)});
  return {{"n", dep.n}, {"kind", to_string(dep.kind)}, {"edges", edges}};
}

Json to_json(const FitReport& r) {
  Json out = {{"family", r.family},
              {"status", to_string(r.status)},
              {"loglik", scalar_json(r.log_likelihood)},
              {"likelihood", scalar_json(r.likelihood)}};
  out["z"] = r.z ? class_map_json(r.z->n, r.z->z) : Json(nullptr);
  out["q"] = r.q ? class_map_json(r.q->n, r.q->q) : Json(nullptr);
  out["constraint_residual"] = r.constraint_residual;
  out["kkt_residual"] = r.kkt_residual;
  out["restarts_used"] = r.restarts_used;
  out["iterations"] = r.iterations;
  if (!r.statistic_names.empty()) {
    Json stats = Json::object();
    Json nu = Json::object();
    for (std::size_t j = 0; j < r.statistic_names.size(); ++j) {
      stats[r.statistic_names[j]] = r.observed[j];
      nu[r.statistic_names[j]] = scalar_json(r.nu[j]);
    }
    out["statistics"] = stats;
    out["nu"] = nu;
    out["gradient_norm"] = r.gradient_norm;
  }
  Json alternatives = Json::array();
  for (const ClassDistribution<double>& cd : r.alternatives)
    alternatives.push_back({{"z", class_map_json(cd.n, mobius_from_class_distribution(cd).z)}, {"q", class_map_json(cd.n, cd.q)}});
  out["alternatives"] = alternatives;
  return out;
}

namespace {

Json dyad_set_json(DyadMask mask) {
  Json out = Json::array();
  for (DyadMask m = mask; m != 0; m &= m - 1) out.push_back(dyad_label(std::countr_zero(m)));
  return out;
}

}  // namespace

Json to_json(const MarkovCheck& check) {
  Json out = {{"holds", check.holds}, {"statements_checked", check.statements_checked}};
  if (check.counterexample)
    out["counterexample"] = {{"a", dyad_set_json(check.counterexample->a)},
                             {"b", dyad_set_json(check.counterexample->b)},
                             {"s", dyad_set_json(check.counterexample->s)}};
  else
    out["counterexample"] = nullptr;
  return out;
}

Json to_json(const std::vector<CollisionGroup>& groups, int n) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  Json list = Json::array();
  for (const CollisionGroup& g : groups) {
    Json classes = Json::array();
    for (std::size_t k : g.classes) classes.push_back(cat[k].key());
    std::vector<int> degrees;
    for (std::size_t j = g.degrees.counts.size(); j-- > 0;)
      for (int c = 0; c < g.degrees.counts[j]; ++c) degrees.push_back(static_cast<int>(j));
    list.push_back({{"degree_distribution", g.degrees.counts}, {"degrees", degrees}, {"classes", classes}});
  }
  return {{"n", n}, {"group_count", groups.size()}, {"groups", list}};
}

Json to_json(const GraphonZ& z) { return {{"value", z.value}, {"error", z.error}, {"method", z.method}}; }

Json to_json(const ErDiagnostic& d) {
  return {{"eta", d.eta},
          {"max_deviation", d.max_deviation},
          {"edge_residual", d.edge_residual},
          {"two_star_residual", d.two_star_residual},
          {"four_cycle_residual", d.four_cycle_residual},
          {"tolerance", d.tolerance},
          {"consistent_with_er", d.consistent_with_er}};
}

ParsedMobius mobius_from_json(const Json& doc) {
  const Json* entries = &doc;
  std::optional<int> n;
  if (doc.is_object()) {
    if (!doc.contains("z") || !doc["z"].is_array()) throw ParseError("Moebius document needs a \"z\" array");
    entries = &doc["z"];
    if (doc.contains("n")) {
      if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
      n = doc["n"].get<int>();
    }
  } else if (!doc.is_array()) {
    throw ParseError("Moebius document must be an object or an array");
  }
  if (!n) {
    for (int k = 1; k <= kMaxCatalogNodes && !n; ++k)
      if (ClassCatalog::get(k).size() == entries->size()) n = k;
    if (!n) throw ParseError("cannot infer the node count from " + std::to_string(entries->size()) + " classes");
  }
  if (*n < 1 || *n > kMaxCatalogNodes) throw ParseError("node count out of range");
  const ClassCatalog& cat = ClassCatalog::get(*n);
  if (entries->size() != cat.size())
    throw ParseError("expected " + std::to_string(cat.size()) + " classes for n = " + std::to_string(*n) + ", got " +
                     std::to_string(entries->size()));
  ParsedMobius out{MobiusVector<Rational>{*n, std::vector<Rational>(cat.size())}, true};
  std::vector<bool> seen(cat.size(), false);
  for (const Json& e : *entries) {
    if (!e.is_object() || !e.contains("class") || !e.contains("z") || !e["class"].is_string())
      throw ParseError("each entry needs \"class\" and \"z\"");
    const auto k = cat.find(parse_class_key(e["class"].get<std::string>()));
    if (!k) throw ParseError("class " + e["class"].get<std::string>() + " does not fit on " + std::to_string(*n) + " nodes");
    if (seen[*k]) throw ParseError("class " + e["class"].get<std::string>() + " listed twice");
    seen[*k] = true;
    out.exact.z[*k] = parse_scalar(e["z"], out.all_exact);
  }
  return out;
}

ParsedJoint joint_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("probs") || !doc["probs"].is_array())
    throw ParseError("joint document needs \"n\" and \"probs\"");
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxLatticeNodes) throw ParseError("joint tables support 1 <= n <= " + std::to_string(kMaxLatticeNodes));
  const std::size_t size = std::size_t{1} << dyad_count(n);
  if (doc["probs"].size() != size)
    throw ParseError("expected " + std::to_string(size) + " probabilities, got " + std::to_string(doc["probs"].size()));
  ParsedJoint out{JointTable<Rational>{n, std::vector<Rational>(size)}, true};
  for (std::size_t x = 0; x < size; ++x) out.exact.probs[x] = parse_scalar(doc["probs"][x], out.all_exact);
  return out;
}

DependenceGraph dependence_graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("dependence graph document needs \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 2 || n > kMaxNodes) throw ParseError("node count out of range");
  const EdgeKind kind = doc.contains("kind") ? parse_edge_kind(doc["kind"].get<std::string>()) : EdgeKind::undirected;
  DependenceGraph dep = DependenceGraph::empty(n, kind);
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("each edge must be a pair of dyad labels");
    const int u = parse_dyad_label(e[0].get<std::string>());
    const int v = parse_dyad_label(e[1].get<std::string>());
    if (u >= dyad_count(n) || v >= dyad_count(n)) throw ParseError("dyad label outside the node set");
    if (u == v) throw ParseError("dependence graphs have no loops");
    dep.add_edge(u, v);
  }
  return dep;
}

std::vector<double> nu_from_json(const Json& doc, const std::vector<std::string>& names) {
  const Json& body = doc.is_object() && doc.contains("nu") ? doc["nu"] : doc;
  auto number = [](const Json& v) {
    bool exact = true;
    return to_double(parse_scalar(v, exact));
  };
  std::vector<double> nu;
  if (body.is_array()) {
    for (const Json& v : body) nu.push_back(number(v));
    return nu;
  }
  if (!body.is_object()) throw ParseError("canonical parameters must be an array or an object");
  for (const auto& [key, value] : body.items())
    if (std::find(names.begin(), names.end(), key) == names.end()) throw ParseError("unknown statistic '" + key + "'");
  for (const std::string& name : names) nu.push_back(body.contains(name) ? number(body[name]) : 0.0);
  return nu;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace exnet
