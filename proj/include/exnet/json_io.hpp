#pragma once

// JSON documents exchanged by the command-line tool and the Python module.
// Exact values are written as "p/q" strings, floating-point values as numbers.

#include <json.hpp>

#include "exnet/consistency.hpp"
#include "exnet/dependence.hpp"
#include "exnet/estimation.hpp"
#include "exnet/genmodels.hpp"
#include "exnet/mobius.hpp"

namespace exnet {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Rational& x) { return to_string(x); }
inline Json scalar_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

/// A number or "p/q" / decimal string. `exact` is cleared for JSON floats.
Rational parse_scalar(const Json& value, bool& exact);

template <class T>
Json to_json(const MobiusVector<T>& mv) {
  const ClassCatalog& cat = ClassCatalog::get(mv.n);
  Json z = Json::array();
  for (std::size_t u = 0; u < cat.size(); ++u) z.push_back({{"class", cat[u].key()}, {"z", scalar_json(mv.z[u])}});
  return {{"n", mv.n}, {"z", z}};
}

template <class T>
Json to_json(const ClassDistribution<T>& cd) {
  const ClassCatalog& cat = ClassCatalog::get(cd.n);
  Json q = Json::array();
  for (std::size_t w = 0; w < cat.size(); ++w) q.push_back({{"class", cat[w].key()}, {"q", scalar_json(cd.q[w])}});
  return {{"n", cd.n}, {"q", q}};
}

template <class T>
Json to_json(const JointTable<T>& jt) {
  Json probs = Json::array();
  for (const T& p : jt.probs) probs.push_back(scalar_json(p));
  return {{"n", jt.n}, {"probs", probs}};
}

/// Class-keyed object {"key": value, ...} in class order.
template <class T>
Json class_map_json(int n, const std::vector<T>& values) {
  const ClassCatalog& cat = ClassCatalog::get(n);
  Json out = Json::object();
  for (std::size_t u = 0; u < cat.size(); ++u) out[cat[u].key()] = scalar_json(values[u]);
  return out;
}

Json to_json(const DependenceGraph& dep);
Json to_json(const FitReport& report);
Json to_json(const MarkovCheck& check);
Json to_json(const std::vector<CollisionGroup>& groups, int n);
Json to_json(const GraphonZ& z);
Json to_json(const ErDiagnostic& d);

template <class T>
Json to_json(const ExtendabilityReport<T>& r) {
  Json out = {{"feasible", r.feasible},
              {"n", r.n},
              {"m", r.m},
              {"cap", kMaxExtensionNodes},
              {"method", r.method},
              {"infeasibility", scalar_json(r.infeasibility)}};
  out["violated_class"] = r.violated_class ? Json(ClassCatalog::get(r.n)[*r.violated_class].key()) : Json(nullptr);
  out["certificate_residual"] = r.certificate_residual;
  out["constraint_residual"] = r.constraint_residual;
  out["restarts_used"] = r.restarts_used;
  out["certificate"] = r.certificate ? class_map_json(r.m, r.certificate->q) : Json(nullptr);
  return out;
}

struct ParsedMobius {
  MobiusVector<Rational> exact;
  bool all_exact = true;
  MobiusVector<double> approx() const { return to_double(exact); }
};

/// {"n": N, "z": [{"class": key, "z": value}, ...]} or the bare array, in
/// which case n is the node count whose class list has that length.
ParsedMobius mobius_from_json(const Json& doc);

struct ParsedJoint {
  JointTable<Rational> exact;
  bool all_exact = true;
};

/// {"n": N, "probs": [...]} with 2^(N(N-1)/2) entries indexed by dyad mask.
ParsedJoint joint_from_json(const Json& doc);

/// {"n": N, "kind": "undirected"|"bidirected", "edges": [["1-2", "3-4"], ...]}
DependenceGraph dependence_graph_from_json(const Json& doc);

/// An array in statistic order, an object keyed by statistic name, or either
/// of those under a "nu" member.
std::vector<double> nu_from_json(const Json& doc, const std::vector<std::string>& names);

Json read_json_file(const std::string& path);

}  // namespace exnet
