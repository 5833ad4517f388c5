#include "exnet/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "exnet/errors.hpp"

namespace exnet {

namespace {

std::array<Dyad, dyad_count(kMaxNodes)> make_dyad_table() {
  std::array<Dyad, dyad_count(kMaxNodes)> table{};
  for (int j = 1; j < kMaxNodes; ++j)
    for (int i = 0; i < j; ++i) table[static_cast<std::size_t>(dyad_index(i, j))] = Dyad{i, j};
  return table;
}

const std::array<Dyad, dyad_count(kMaxNodes)> kDyads = make_dyad_table();

void check_node_count(int n) {
  if (n < 1) throw std::invalid_argument("network must have at least one node");
  if (n > kMaxNodes) throw SizeCapExceeded("networks are limited to " + std::to_string(kMaxNodes) + " nodes");
}

std::array<VertexMask, kMaxNodes> adjacency_rows(const LabeledNetwork& g) {
  std::array<VertexMask, kMaxNodes> rows{};
  for (DyadMask m = g.mask(); m != 0; m &= m - 1) {
    const Dyad d = kDyads[static_cast<std::size_t>(std::countr_zero(m))];
    rows[static_cast<std::size_t>(d.i)] |= VertexMask{1} << d.j;
    rows[static_cast<std::size_t>(d.j)] |= VertexMask{1} << d.i;
  }
  return rows;
}

// Branch and bound over vertex orderings. Placing the vertex at position p
// fixes exactly the dyads (0,p)..(p-1,p), which are the next p characters of
// the colex bitstring, so any ordering whose prefix already exceeds the best
// complete string can be discarded. Twins (vertices whose neighbourhoods agree
// apart from each other) are interchangeable and only the lowest unused one
// is tried.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabeledNetwork& g) : n_(g.n()), adj_(adjacency_rows(g)) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        const VertexMask bu = VertexMask{1} << u;
        const VertexMask bv = VertexMask{1} << v;
        twin_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
            u != v && (adj_[static_cast<std::size_t>(u)] & ~bv) == (adj_[static_cast<std::size_t>(v)] & ~bu);
      }
  }

  DyadMask run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int pos, VertexMask used, DyadMask current) {
    if (pos == n_) {
      if (!have_best_ || lex_less(current, best_)) {
        best_ = current;
        have_best_ = true;
      }
      return;
    }
    const int base = dyad_count(pos);
    const DyadMask prefix = full_mask(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      bool shadowed = false;
      for (int u = 0; u < v && !shadowed; ++u)
        shadowed = !((used >> u) & 1U) && twin_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (shadowed) continue;

      DyadMask next = current;
      const VertexMask row = adj_[static_cast<std::size_t>(v)];
      for (int a = 0; a < pos; ++a)
        if ((row >> order_[static_cast<std::size_t>(a)]) & 1U) next |= DyadMask{1} << (base + a);
      if (have_best_) {
        const DyadMask diff = (next ^ best_) & prefix;
        if (diff != 0 && ((next >> std::countr_zero(diff)) & 1U)) continue;
      }
      order_[static_cast<std::size_t>(pos)] = v;
      search(pos + 1, used | (VertexMask{1} << v), next);
    }
  }

  int n_;
  std::array<VertexMask, kMaxNodes> adj_;
  std::array<std::array<bool, kMaxNodes>, kMaxNodes> twin_{};
  std::array<int, kMaxNodes> order_{};
  DyadMask best_ = 0;
  bool have_best_ = false;
};

std::uint64_t count_automorphisms(int n, const std::array<VertexMask, kMaxNodes>& adj, int pos,
                                  std::array<int, kMaxNodes>& image, VertexMask used) {
  if (pos == n) return 1;
  std::uint64_t total = 0;
  const VertexMask row = adj[static_cast<std::size_t>(pos)];
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1U) continue;
    if (std::popcount(adj[static_cast<std::size_t>(v)]) != std::popcount(row)) continue;
    bool ok = true;
    for (int a = 0; a < pos && ok; ++a) {
      const bool edge = (row >> a) & 1U;
      const bool mapped = (adj[static_cast<std::size_t>(v)] >> image[static_cast<std::size_t>(a)]) & 1U;
      ok = edge == mapped;
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(pos)] = v;
    total += count_automorphisms(n, adj, pos + 1, image, used | (VertexMask{1} << v));
  }
  return total;
}

// Canonical masks of all graphs on exactly n nodes (isolated nodes allowed).
const std::vector<DyadMask>& graphs_on(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<DyadMask>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<DyadMask> result;
  if (n == 1) {
    result.push_back(0);
  } else {
    const auto& smaller = graphs_on(n - 1);
    std::set<DyadMask> seen;
    const int shift = dyad_count(n - 1);
    for (DyadMask base : smaller)
      for (DyadMask nbrs = 0; nbrs < (DyadMask{1} << (n - 1)); ++nbrs)
        seen.insert(canonical_form(LabeledNetwork(n, base | (nbrs << shift))).bits);
    result.assign(seen.begin(), seen.end());
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

Dyad dyad_at(int index) { return kDyads.at(static_cast<std::size_t>(index)); }

std::string dyad_label(int index) {
  const Dyad d = dyad_at(index);
  return std::to_string(d.i + 1) + "-" + std::to_string(d.j + 1);
}

int parse_dyad_label(std::string_view label) {
  const auto dash = label.find('-');
  if (dash == std::string_view::npos) throw ParseError("dyad label must look like i-j: " + std::string(label));
  int i = 0;
  int j = 0;
  try {
    i = std::stoi(std::string(label.substr(0, dash)));
    j = std::stoi(std::string(label.substr(dash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad dyad label: " + std::string(label));
  }
  if (i < 1 || j < 1 || i == j || i > kMaxNodes || j > kMaxNodes)
    throw ParseError("bad dyad label: " + std::string(label));
  return dyad_index(i - 1, j - 1);
}

VertexMask dyad_support(DyadMask mask) {
  VertexMask nodes = 0;
  for (; mask != 0; mask &= mask - 1) {
    const Dyad d = kDyads[static_cast<std::size_t>(std::countr_zero(mask))];
    nodes |= (VertexMask{1} << d.i) | (VertexMask{1} << d.j);
  }
  return nodes;
}

std::vector<DyadMask> dyad_components(DyadMask mask) {
  std::vector<DyadMask> components;
  while (mask != 0) {
    DyadMask component = mask & (~mask + 1);
    VertexMask nodes = dyad_support(component);
    bool grew = true;
    while (grew) {
      grew = false;
      for (DyadMask rest = mask & ~component; rest != 0; rest &= rest - 1) {
        const int d = std::countr_zero(rest);
        const Dyad dy = kDyads[static_cast<std::size_t>(d)];
        if (((nodes >> dy.i) & 1U) || ((nodes >> dy.j) & 1U)) {
          component |= DyadMask{1} << d;
          nodes |= (VertexMask{1} << dy.i) | (VertexMask{1} << dy.j);
          grew = true;
        }
      }
    }
    components.push_back(component);
    mask &= ~component;
  }
  return components;
}

LabeledNetwork::LabeledNetwork(int n, DyadMask mask) : n_(n), mask_(mask) {
  check_node_count(n);
  if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("edge endpoint outside node set");
}

LabeledNetwork LabeledNetwork::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_node_count(n);
  DyadMask mask = 0;
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw std::invalid_argument("edge " + std::to_string(i) + "-" + std::to_string(j) + " outside 1.." +
                                  std::to_string(n));
    if (i == j) throw std::invalid_argument("loops are not allowed");
    mask |= DyadMask{1} << dyad_index(i - 1, j - 1);
  }
  return LabeledNetwork(n, mask);
}

LabeledNetwork LabeledNetwork::complete(int n) { return LabeledNetwork(n, full_mask(n)); }

LabeledNetwork LabeledNetwork::star(int k) {
  DyadMask mask = 0;
  for (int leaf = 1; leaf <= k; ++leaf) mask |= DyadMask{1} << dyad_index(0, leaf);
  return LabeledNetwork(k + 1, mask);
}

LabeledNetwork LabeledNetwork::path(int vertices) {
  DyadMask mask = 0;
  for (int v = 0; v + 1 < vertices; ++v) mask |= DyadMask{1} << dyad_index(v, v + 1);
  return LabeledNetwork(vertices, mask);
}

LabeledNetwork LabeledNetwork::cycle(int vertices) {
  LabeledNetwork p = path(vertices);
  return LabeledNetwork(vertices, p.mask() | (DyadMask{1} << dyad_index(0, vertices - 1)));
}

std::vector<std::pair<int, int>> LabeledNetwork::edges() const {
  std::vector<std::pair<int, int>> out;
  for (DyadMask m = mask_; m != 0; m &= m - 1) {
    const Dyad d = kDyads[static_cast<std::size_t>(std::countr_zero(m))];
    out.emplace_back(d.i, d.j);
  }
  return out;
}

std::vector<int> LabeledNetwork::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto [i, j] : edges()) {
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  return deg;
}

LabeledNetwork LabeledNetwork::permuted(std::span<const int> perm) const {
  DyadMask out = 0;
  for (DyadMask m = mask_; m != 0; m &= m - 1) {
    const Dyad d = kDyads[static_cast<std::size_t>(std::countr_zero(m))];
    out |= DyadMask{1} << dyad_index(perm[static_cast<std::size_t>(d.i)], perm[static_cast<std::size_t>(d.j)]);
  }
  return LabeledNetwork(n_, out);
}

LabeledNetwork LabeledNetwork::restricted_to_support() const {
  const VertexMask nodes = support();
  const int k = std::popcount(nodes);
  if (k == 0) return LabeledNetwork(1, 0);
  std::array<int, kMaxNodes> relabel{};
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if ((nodes >> v) & 1U) relabel[static_cast<std::size_t>(v)] = next++;
  DyadMask out = 0;
  for (auto [i, j] : edges())
    out |= DyadMask{1} << dyad_index(relabel[static_cast<std::size_t>(i)], relabel[static_cast<std::size_t>(j)]);
  return LabeledNetwork(k, out);
}

LabeledNetwork LabeledNetwork::padded(int n) const {
  if (n < n_) throw std::invalid_argument("cannot pad to fewer nodes");
  return LabeledNetwork(n, mask_);
}

std::string CanonicalForm::bitstring() const {
  std::string s(static_cast<std::size_t>(dyad_count(n_vertices)), '0');
  for (std::size_t d = 0; d < s.size(); ++d)
    if ((bits >> d) & 1U) s[d] = '1';
  return s;
}

bool lex_less(DyadMask a, DyadMask b) {
  const DyadMask diff = a ^ b;
  if (diff == 0) return false;
  return ((a >> std::countr_zero(diff)) & 1U) == 0;
}

std::string UnlabeledClass::key() const {
  if (is_empty()) return "EMPTY";
  auto edges = representative().edges();
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (auto [i, j] : edges) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
  }
  return out;
}

bool class_order_less(const UnlabeledClass& a, const UnlabeledClass& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return lex_less(a.canon.bits, b.canon.bits);
}

int DegreeDistribution::node_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int DegreeDistribution::degree_sum() const {
  int sum = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) sum += static_cast<int>(j) * counts[j];
  return sum;
}

CanonicalForm canonical_form(const LabeledNetwork& g) {
  return CanonicalForm{g.n(), CanonicalSearch(g).run()};
}

UnlabeledClass class_of(const LabeledNetwork& g) {
  if (g.mask() == 0) return UnlabeledClass{};
  return UnlabeledClass{canonical_form(g.restricted_to_support())};
}

UnlabeledClass parse_class_key(std::string_view key) {
  std::string text(key);
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text == "EMPTY" || text.empty()) return UnlabeledClass{};
  DyadMask mask = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) mask |= DyadMask{1} << parse_dyad_label(item);
  int n = 0;
  for (VertexMask nodes = dyad_support(mask); nodes != 0; nodes &= nodes - 1) n = std::countr_zero(nodes) + 1;
  return class_of(LabeledNetwork(n, mask));
}

std::uint64_t aut_count(const LabeledNetwork& g) {
  std::array<int, kMaxNodes> image{};
  return count_automorphisms(g.n(), adjacency_rows(g), 0, image, 0);
}

std::vector<UnlabeledClass> enumerate_classes(int n, bool include_empty) {
  if (n < 1 || n > kMaxNodes)
    throw SizeCapExceeded("class enumeration supports 1 <= n <= " + std::to_string(kMaxNodes));
  std::vector<UnlabeledClass> classes;
  for (DyadMask bits : graphs_on(n)) {
    if (bits == 0) continue;
    classes.push_back(class_of(LabeledNetwork(n, bits)));
  }
  std::sort(classes.begin(), classes.end(), class_order_less);
  if (include_empty) classes.insert(classes.begin(), UnlabeledClass{});
  return classes;
}

DegreeDistribution degree_distribution(const LabeledNetwork& g) {
  DegreeDistribution dd;
  dd.counts.assign(static_cast<std::size_t>(g.n()), 0);
  for (int d : g.degrees()) ++dd.counts[static_cast<std::size_t>(d)];
  return dd;
}

std::vector<std::vector<int>> connected_components(const LabeledNetwork& g) {
  std::vector<std::vector<int>> out;
  for (DyadMask component : dyad_components(g.mask())) {
    std::vector<int> nodes;
    for (VertexMask m = dyad_support(component); m != 0; m &= m - 1) nodes.push_back(std::countr_zero(m));
    out.push_back(std::move(nodes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

LabeledNetwork parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    auto as_int = [&](const std::string& w) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.size()) throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + w + "'");
      return value;
    };
    if (words.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
    if (n < 0) {
      if (words[0] == "n") {
        n = as_int(words[1]);
      } else {
        n = as_int(words[0]);
        declared_edges = as_int(words[1]);
      }
      if (n < 1) throw ParseError("node count must be positive");
      if (n > kMaxNodes) throw SizeCapExceeded("networks are limited to " + std::to_string(kMaxNodes) + " nodes");
      continue;
    }
    const int i = as_int(words[0]);
    const int j = as_int(words[1]);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw ParseError("line " + std::to_string(line_no) + ": invalid edge " + words[0] + " " + words[1]);
    edges.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing header line `n <nodes>`");
  LabeledNetwork g = LabeledNetwork::from_edges(n, edges);
  if (declared_edges >= 0 && declared_edges != g.edge_count())
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(g.edge_count()));
  return g;
}

LabeledNetwork read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const LabeledNetwork& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

}  // namespace exnet
