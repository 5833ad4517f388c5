#include "exnet/dependence.hpp"

namespace exnet {

std::string to_string(EdgeKind kind) { return kind == EdgeKind::undirected ? "undirected" : "bidirected"; }

EdgeKind parse_edge_kind(const std::string& text) {
  if (text == "undirected") return EdgeKind::undirected;
  if (text == "bidirected") return EdgeKind::bidirected;
  throw ParseError("edge kind must be 'undirected' or 'bidirected', got '" + text + "'");
}

DependenceGraph DependenceGraph::empty(int n, EdgeKind kind) {
  if (n < 2 || n > kMaxNodes) throw std::invalid_argument("dependence graphs need 2 <= n <= 8");
  return DependenceGraph{n, kind, std::vector<DyadMask>(static_cast<std::size_t>(dyad_count(n)), 0)};
}

DependenceGraph DependenceGraph::complete(int n, EdgeKind kind) { return empty(n, kind).complement(); }

int DependenceGraph::edge_count() const {
  int twice = 0;
  for (DyadMask row : adjacency) twice += std::popcount(row);
  return twice / 2;
}

void DependenceGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("dependence graphs have no self-adjacency");
  adjacency.at(static_cast<std::size_t>(u)) |= DyadMask{1} << v;
  adjacency.at(static_cast<std::size_t>(v)) |= DyadMask{1} << u;
}

DependenceGraph DependenceGraph::complement() const {
  DependenceGraph out = *this;
  const DyadMask all = full_mask(n);
  for (std::size_t d = 0; d < out.adjacency.size(); ++d) out.adjacency[d] = all & ~adjacency[d] & ~(DyadMask{1} << d);
  return out;
}

std::vector<std::pair<int, int>> DependenceGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

DyadMask DependenceGraph::reachable(DyadMask from, DyadMask allowed) const {
  DyadMask seen = from & allowed;
  DyadMask frontier = seen;
  while (frontier != 0) {
    DyadMask next = 0;
    for (DyadMask f = frontier; f != 0; f &= f - 1) next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<DyadMask> DependenceGraph::components(DyadMask vertices) const {
  std::vector<DyadMask> out;
  while (vertices != 0) {
    const DyadMask component = reachable(vertices & (~vertices + 1), vertices);
    out.push_back(component);
    vertices &= ~component;
  }
  return out;
}

DependenceGraph incidence_graph(int n, EdgeKind kind) {
  DependenceGraph g = DependenceGraph::empty(n, kind);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const Dyad a = dyad_at(u);
      const Dyad b = dyad_at(v);
      if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) g.add_edge(u, v);
    }
  return g;
}

DependenceGraph kneser_graph(int n, EdgeKind kind) { return incidence_graph(n, kind).complement(); }

namespace {

void grow_cliques(const DependenceGraph& g, DyadMask clique, DyadMask candidates, std::vector<DyadMask>& out) {
  for (DyadMask c = candidates; c != 0; c &= c - 1) {
    const int v = std::countr_zero(c);
    const DyadMask bigger = clique | (DyadMask{1} << v);
    out.push_back(bigger);
    // Only extend with higher-indexed vertices so each clique appears once.
    const DyadMask higher = ~((DyadMask{2} << v) - 1);
    grow_cliques(g, bigger, candidates & g.adjacency[static_cast<std::size_t>(v)] & higher, out);
  }
}

}  // namespace

std::vector<DyadClique> incidence_cliques(int n) {
  const DependenceGraph g = incidence_graph(n, EdgeKind::undirected);
  std::vector<DyadMask> cliques;
  grow_cliques(g, 0, full_mask(n), cliques);
  std::vector<DyadClique> out;
  for (DyadMask c : cliques) {
    DyadClique clique{c, CliqueShape::other, -1};
    VertexMask common = ~VertexMask{0};
    for (DyadMask m = c; m != 0; m &= m - 1) {
      const Dyad d = dyad_at(std::countr_zero(m));
      common &= (VertexMask{1} << d.i) | (VertexMask{1} << d.j);
    }
    if (common != 0) {
      clique.shape = CliqueShape::star;
      clique.hub = std::countr_zero(common);
    } else if (std::popcount(c) == 3 && std::popcount(dyad_support(c)) == 3) {
      clique.shape = CliqueShape::triangle;
    }
    out.push_back(clique);
  }
  return out;
}

std::vector<DyadMask> connected_sets(const DependenceGraph& dep) {
  if (dep.vertex_count() > 15) throw SizeCapExceeded("connected-set enumeration supports at most 15 vertices");
  std::vector<DyadMask> out;
  const DyadMask limit = DyadMask{1} << dep.vertex_count();
  for (DyadMask s = 1; s < limit; ++s)
    if (dep.reachable(s & (~s + 1), s) == s) out.push_back(s);
  return out;
}

std::string to_string(SkeletonClass c) {
  switch (c) {
    case SkeletonClass::empty: return "empty";
    case SkeletonClass::incidence: return "incidence";
    case SkeletonClass::kneser: return "kneser";
    case SkeletonClass::complete: return "complete";
    case SkeletonClass::other: return "other";
  }
  return "other";
}

SkeletonClass classify_skeleton(const DependenceGraph& sk) {
  auto same = [&](const DependenceGraph& ref) { return ref.adjacency == sk.adjacency; };
  if (same(DependenceGraph::empty(sk.n, sk.kind))) return SkeletonClass::empty;
  if (same(DependenceGraph::complete(sk.n, sk.kind))) return SkeletonClass::complete;
  if (same(incidence_graph(sk.n, sk.kind))) return SkeletonClass::incidence;
  if (same(kneser_graph(sk.n, sk.kind))) return SkeletonClass::kneser;
  return SkeletonClass::other;
}

bool separated(const DependenceGraph& dep, DyadMask a, DyadMask b, DyadMask s) {
  const DyadMask all = full_mask(dep.n);
  const DyadMask allowed = dep.kind == EdgeKind::undirected ? (all & ~s) : (a | b | s);
  return (dep.reachable(a, allowed) & b) == 0;
}

}  // namespace exnet
