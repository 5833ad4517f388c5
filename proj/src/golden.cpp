#include "exnet/golden.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "exnet/consistency.hpp"
#include "exnet/dependence.hpp"
#include "exnet/estimation.hpp"
#include "exnet/genmodels.hpp"
#include "exnet/homcount.hpp"

namespace exnet {

namespace {

LabeledNetwork paw() {
  const std::pair<int, int> e[] = {{1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return LabeledNetwork::from_edges(4, e);
}

template <class T>
const T& by_key(const std::vector<T>& values, int n, const std::string& key) {
  return values[ClassCatalog::get(n).index_of(parse_class_key(key))];
}

const char* const kEdge = "1-2";
const char* const kTwoStar = "1-3,2-3";
const char* const kTwoEdges = "1-4,2-3";
const char* const kTriangle = "1-2,1-3,2-3";
const char* const kThreeStar = "1-4,2-4,3-4";
const char* const kPath = "1-4,2-3,3-4";
const char* const kPaw = "1-4,2-3,2-4,3-4";

GoldenItem paw_exchangeable_mle() {
  const MobiusVector<Rational> z = exch_mle(paw());
  const std::map<std::string, Rational> expected = {
      {kEdge, Rational(2, 3)},      {kTwoStar, Rational(5, 12)}, {kTwoEdges, Rational(1, 3)}, {kTriangle, Rational(1, 4)},
      {kThreeStar, Rational(1, 4)}, {kPath, Rational(1, 6)},     {kPaw, Rational(1, 12)}};
  const ClassCatalog& cat = ClassCatalog::get(4);
  bool ok = z.z[0] == 1;
  std::ostringstream detail;
  for (std::size_t u = 1; u < cat.size(); ++u) {
    auto it = expected.find(cat[u].key());
    const Rational want = it == expected.end() ? Rational(0) : it->second;
    if (z.z[u] != want) {
      ok = false;
      detail << cat[u].key() << ": " << z.z[u].get_str() << " != " << want.get_str() << "; ";
    }
  }
  return {"exchangeable MLE of the paw", ok, ok ? "2/3 5/12 1/3 1/4 1/4 1/6 1/12, zero elsewhere" : detail.str()};
}

GoldenItem statistics(ErgmFamily family, const std::vector<std::int64_t>& want) {
  const std::vector<std::int64_t> got = ergm_stats({family, 4}, paw());
  std::ostringstream detail;
  for (std::size_t j = 0; j < got.size(); ++j) detail << (j ? "," : "(") << got[j];
  detail << ")";
  return {to_string(family) + " statistics of the paw", got == want, detail.str()};
}

GoldenItem paw_dissociated_mle() {
  const FitReport r = dissociated_mle(paw());
  const std::map<std::string, double> expected = {{kEdge, 0.5},        {kTwoStar, 5.0 / 16}, {kTwoEdges, 0.25},
                                                  {kTriangle, 3.0 / 16}, {kThreeStar, 3.0 / 16}, {kPath, 0.125},
                                                  {kPaw, 1.0 / 16}};
  double worst = 0.0;
  for (const auto& [key, value] : expected) worst = std::max(worst, std::abs(by_key(r.z->z, 4, key) - value));
  const bool ok = r.status == FitStatus::optimal && worst < 1e-4 && std::abs(r.likelihood - 1.0 / 16) < 1e-6 &&
                  r.constraint_residual < 1e-8;
  std::ostringstream detail;
  detail << "likelihood " << r.likelihood << ", max |z - z*| " << worst << ", residual " << r.constraint_residual;
  return {"dissociated MLE of the paw", ok, detail.str()};
}

GoldenItem path_dissociated_mle() {
  const FitReport r = dissociated_mle(LabeledNetwork::path(4));
  bool ends = r.alternatives.size() == 2;
  if (ends) {
    // The optimal family runs between z_triangle = 0 and z_3star = 0.
    std::vector<double> tri, star;
    for (const ClassDistribution<double>& q : r.alternatives) {
      const MobiusVector<double> z = mobius_from_class_distribution(q);
      tri.push_back(by_key(z.z, 4, kTriangle));
      star.push_back(by_key(z.z, 4, kThreeStar));
    }
    ends = std::min(tri[0], tri[1]) < 1e-6 && std::min(star[0], star[1]) < 1e-6 &&
           std::abs(std::max(tri[0], tri[1]) - 1.0 / 16) < 1e-6;
  }
  const bool ok = r.status == FitStatus::non_unique && std::abs(r.likelihood - 1.0 / 16) < 1e-6 && ends;
  std::ostringstream detail;
  detail << "status " << to_string(r.status) << ", likelihood " << r.likelihood;
  return {"dissociated MLE of the 4-path is not unique", ok, detail.str()};
}

GoldenItem collisions() {
  const std::vector<CollisionGroup> groups = degree_collision_classes(5);
  std::vector<std::vector<int>> seqs;
  for (const CollisionGroup& g : groups) {
    std::vector<int> d;
    for (std::size_t j = g.degrees.counts.size(); j-- > 0;)
      for (int c = 0; c < g.degrees.counts[j]; ++c) d.push_back(static_cast<int>(j));
    seqs.push_back(d);
    if (g.classes.size() != 2) seqs.clear();
  }
  std::sort(seqs.begin(), seqs.end());
  const std::vector<std::vector<int>> want = {{2, 2, 2, 1, 1}, {3, 2, 2, 2, 1}, {3, 3, 2, 2, 2}};
  const bool ok = degree_collision_classes(4).empty() && seqs == want;
  return {"degree collisions on 5 nodes", ok, std::to_string(groups.size()) + " groups"};
}

GoldenItem bidirected_complement() {
  const DependenceGraph dep = kneser_graph(4, EdgeKind::bidirected);
  const Rational ze(1, 2), zd(1, 5);
  std::map<DyadMask, Rational> z;
  for (DyadMask s : connected_sets(dep)) z[s] = std::popcount(s) == 1 ? ze : zd;
  const Rational p = bidirected_joint(dep, z, paw().mask());
  const Rational want = ze * ze * zd - 2 * ze * zd * zd + zd * zd * zd;
  return {"bidirected complement of the incidence graph", p == want, "P(paw) = " + p.get_str()};
}

GoldenItem petersen() {
  const DependenceGraph g = kneser_graph(5, EdgeKind::undirected);
  bool regular = true;
  for (int d = 0; d < g.vertex_count(); ++d) regular = regular && g.degree(d) == 3;
  const bool ok = g.vertex_count() == 10 && g.edge_count() == 15 && regular;
  return {"KG(5,2) is the Petersen graph", ok, std::to_string(g.vertex_count()) + " vertices, " +
                                                   std::to_string(g.edge_count()) + " edges"};
}

GoldenItem incidence_cliques_shape() {
  int bad = 0;
  const std::vector<DyadClique> cliques = incidence_cliques(5);
  for (const DyadClique& c : cliques) {
    const LabeledNetwork g(5, c.dyads);
    const int k = g.edge_count();
    const bool star = g.support_size() == k + 1;
    const bool triangle = k == 3 && g.support_size() == 3;
    if ((!star && !triangle) || c.shape == CliqueShape::other) ++bad;
  }
  return {"cliques of L(5) are triangles and stars", bad == 0 && !cliques.empty(),
          std::to_string(cliques.size()) + " cliques, " + std::to_string(bad) + " exceptions"};
}

GoldenItem paw_not_extendable() {
  const ExtendabilityReport<Rational> r = extendable_check(exch_mle(paw()), 5);
  const ExtendabilityReport<Rational> r4 = extendable_check(exch_mle(paw()), 4);
  return {"exchangeable MLE of the paw is not extendable to 5 nodes", r4.feasible && !r.feasible,
          "infeasibility " + r.infeasibility.get_str()};
}

GoldenItem er_extendable() {
  bool ok = true;
  for (int m = 4; m <= kMaxExtensionNodes; ++m) ok = ok && extendable_check(er_mobius(4, Rational(1, 3)), m).feasible;
  return {"Erdos-Renyi parameters extend to 7 nodes", ok, "p = 1/3"};
}

GoldenItem two_point_beta() {
  const JointTable<Rational> jt = marginal_beta_joint_exact(4, Rational(1, 2), Rational(3), Rational(1, 3));
  const DependenceGraph lb = incidence_graph(4, EdgeKind::bidirected);
  const bool markov = global_markov_check(jt, lb).holds;
  const bool not_independent = !global_markov_check(jt, DependenceGraph::empty(4, EdgeKind::bidirected)).holds;
  const SkeletonClass sk = classify_skeleton(skeleton(jt));
  const bool ok = markov && not_independent && sk == SkeletonClass::incidence && is_exchangeable(jt) &&
                  dissociated_check(labeled_mobius_from_joint(jt)).ok && summarized_check(jt).ok;
  return {"marginal beta model is dissociated and summarized", ok, "skeleton " + to_string(sk)};
}

GoldenItem product_graphon() {
  const Graphon phi = Graphon::function([](double u, double v) { return u * v; }, "uv");
  const GraphonZ edge = graphon_z(phi, parse_class_key(kEdge));
  const GraphonZ star = graphon_z(phi, parse_class_key(kTwoStar));
  const bool ok = std::abs(edge.value - 0.25) <= std::max(edge.error, 1e-12) &&
                  std::abs(star.value - 1.0 / 12) <= std::max(star.error, 1e-12) &&
                  !er_characterization_diagnostic(phi, 0.25).consistent_with_er;
  std::ostringstream detail;
  detail << "edge " << edge.value << ", 2-star " << star.value << " +- " << star.error;
  return {"graphon uv moments", ok, detail.str()};
}

}  // namespace

std::vector<GoldenItem> run_golden_examples() {
  const std::vector<std::function<GoldenItem()>> items = {
      paw_exchangeable_mle,
      [] { return statistics(ErgmFamily::frank_strauss, {4, 5, 1, 1}); },
      [] { return statistics(ErgmFamily::kneser, {4, 1}); },
      paw_dissociated_mle,
      path_dissociated_mle,
      collisions,
      bidirected_complement,
      petersen,
      incidence_cliques_shape,
      paw_not_extendable,
      er_extendable,
      two_point_beta,
      product_graphon,
  };
  std::vector<GoldenItem> out;
  for (const auto& item : items) {
    try {
      out.push_back(item());
    } catch (const std::exception& e) {
      out.push_back({"(error)", false, e.what()});
    }
  }
  return out;
}

}  // namespace exnet
