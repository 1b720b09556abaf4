#include "cutideal/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cutideal {

namespace {

std::string describe(const Edge& e) {
  std::ostringstream out;
  out << "{" << e.u << "," << e.v << "}";
  return out.str();
}

Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw GraphError("multiplicity overflow");
  return out;
}

// A label is anchored when it is carried by the edge it names. Anchored labels
// follow their edge through renumbering; returns the anchor for each.
std::map<Label, EdgeKey> anchors(const Graph& g) {
  std::map<Label, EdgeKey> out;
  for (const Edge& e : g.edges())
    if (e.label == canonical_label(e.u, e.v)) out.emplace(e.label, e.key());
  return out;
}

// Renames labels after the edges moved. `move` sends an old edge key to its
// new one; non-anchored labels go through `other`. Names produced for
// non-anchored labels that collide with a new anchored name are primed.
template <class Move, class Other>
LabelMap rename_labels(const Graph& g, Move move, Other other) {
  const auto anchor = anchors(g);
  LabelMap out;
  std::set<Label> taken;
  for (const Label& l : g.labels()) {
    if (auto it = anchor.find(l); it != anchor.end()) {
      EdgeKey k = move(it->second);
      out[l] = canonical_label(k.u, k.v);
      taken.insert(out[l]);
    }
  }
  for (const Label& l : g.labels()) {
    if (anchor.count(l)) continue;
    Label name = other(l);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    out[l] = name;
  }
  return out;
}

}  // namespace

Label canonical_label(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n_) throw GraphError("edge " + describe(e) + " out of range");
    if (e.mult == 0) throw GraphError("edge " + describe(e) + " has zero multiplicity");
    if (e.label.empty()) throw GraphError("edge " + describe(e) + " has an empty label");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                [](const Edge& a, const Edge& b) { return a.key() == b.key(); });
  if (dup != edges_.end()) throw GraphError("duplicate edge " + describe(*dup));
}

std::vector<Label> Graph::labels() const {
  std::vector<Label> out;
  std::set<Label> seen;
  for (const Edge& e : edges_)
    if (seen.insert(e.label).second) out.push_back(e.label);
  return out;
}

std::optional<std::size_t> Graph::find_edge(Vertex u, Vertex v) const {
  EdgeKey k(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), k,
                             [](const Edge& e, const EdgeKey& key) { return e.key() < key; });
  if (it == edges_.end() || it->key() != k) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_canonical_labels() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.label == canonical_label(e.u, e.v); });
}

bool Graph::is_classical() const {
  return has_canonical_labels() &&
         std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult == 1; });
}

const char* to_string(CollapseKind kind) {
  return kind == CollapseKind::Simple ? "simple" : "singular";
}

Graph classical_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (n < 1) throw GraphError("a graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, canonical_label(u, v), 1});
  return Graph(n, std::move(edges));
}

Graph permute_vertices(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation has the wrong length");
  std::vector<bool> hit(n + 1, false);
  for (Vertex v : perm) {
    if (v < 1 || v > n || hit[v]) throw GraphError("not a permutation of the vertex set");
    hit[v] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1], e.label, e.mult});
  return Graph(n, std::move(edges));
}

Graph set_multiplicities(const Graph& g, const std::map<EdgeKey, Multiplicity>& sigma) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    auto it = sigma.find(e.key());
    if (it == sigma.end()) throw GraphError("no multiplicity given for edge " + describe(e));
    if (it->second == 0) throw GraphError("zero multiplicity for edge " + describe(e));
    e.mult = it->second;
  }
  for (const auto& [k, m] : sigma)
    if (!g.has_edge(k.u, k.v))
      throw GraphError("multiplicity given for non-edge {" + std::to_string(k.u) + "," +
                       std::to_string(k.v) + "}");
  return Graph(g.vertex_count(), std::move(edges));
}

Graph merge_labels(const Graph& g, const Label& from, const Label& to) {
  const auto labels = g.labels();
  for (const Label* l : {&from, &to})
    if (std::find(labels.begin(), labels.end(), *l) == labels.end())
      throw GraphError("unknown label " + *l);
  if (from == to) throw GraphError("cannot merge a label into itself");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges)
    if (e.label == from) e.label = to;
  return Graph(g.vertex_count(), std::move(edges));
}

UnionResult disjoint_union_tracked(const Graph& g, const Graph& h) {
  const int shift = g.vertex_count();
  UnionResult out;
  out.left_labels = rename_labels(
      g, [](EdgeKey k) { return k; }, [](const Label& l) { return "g." + l; });
  out.right_labels = rename_labels(
      h, [shift](EdgeKey k) { return EdgeKey(k.u + shift, k.v + shift); },
      [](const Label& l) { return "h." + l; });

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, out.left_labels.at(e.label), e.mult});
  for (const Edge& e : h.edges())
    edges.push_back({e.u + shift, e.v + shift, out.right_labels.at(e.label), e.mult});
  out.graph = Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) { return disjoint_union_tracked(g, h).graph; }

CollapseResult collapse(const Graph& g, Vertex i, Vertex j) {
  const int n = g.vertex_count();
  if (i < 1 || i > n || j < 1 || j > n) throw GraphError("collapse vertex out of range");
  if (i == j) throw GraphError("cannot collapse a vertex with itself");
  if (g.has_edge(i, j))
    throw GraphError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                     " are adjacent");
  const Vertex keep = std::min(i, j);
  const Vertex gone = std::max(i, j);

  // Force each collapsing couple of edges onto one label, walking the common
  // neighbours in ascending order.
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  LabelMap relabel;
  for (const Label& l : g.labels()) relabel[l] = l;
  for (Vertex x = 1; x <= n; ++x) {
    auto kx = g.find_edge(keep, x);
    auto gx = g.find_edge(gone, x);
    if (!kx || !gx) continue;
    const Label from = edges[*gx].label;
    const Label to = edges[*kx].label;
    if (from == to) continue;
    for (Edge& e : edges)
      if (e.label == from) e.label = to;
    for (auto& [orig, cur] : relabel)
      if (cur == from) cur = to;
  }
  const Graph relabelled(n, edges);

  auto move = [keep, gone](Vertex v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  const LabelMap rename = rename_labels(
      relabelled, [&](EdgeKey k) { return EdgeKey(move(k.u), move(k.v)); },
      [](const Label& l) { return l; });

  std::map<EdgeKey, Edge> merged;
  for (const Edge& e : relabelled.edges()) {
    EdgeKey k(move(e.u), move(e.v));
    auto [it, fresh] = merged.try_emplace(k, Edge{k.u, k.v, rename.at(e.label), e.mult});
    if (fresh) continue;
    it->second.mult = checked_add(it->second.mult, e.mult);
    if (it->second.mult == 0)
      throw GraphError("collapsing " + std::to_string(i) + " and " + std::to_string(j) +
                       " gives edge " + describe(it->second) + " multiplicity zero");
  }

  CollapseResult out;
  std::vector<Edge> result;
  for (auto& [k, e] : merged) result.push_back(std::move(e));
  out.kind = result.size() == g.edge_count() ? CollapseKind::Simple : CollapseKind::Singular;
  out.graph = Graph(n - 1, std::move(result));
  for (const auto& [orig, cur] : relabel) out.labels[orig] = rename.at(cur);
  out.kept = keep;
  out.removed = gone;
  return out;
}

Graph clique_zero_sum(const Graph& g, const Graph& h, Vertex v, Vertex w) {
  if (v < 1 || v > g.vertex_count()) throw GraphError("gluing vertex out of range in first graph");
  if (w < 1 || w > h.vertex_count()) throw GraphError("gluing vertex out of range in second graph");
  return collapse(disjoint_union(g, h), v, w + g.vertex_count()).graph;
}

}  // namespace cutideal
