#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutideal {

// Raised when a graph or a graph operation violates a structural invariant.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;
using Multiplicity = std::int64_t;
using Label = std::string;
// Old label -> new label, as produced by the label-moving operations.
using LabelMap = std::map<Label, Label>;

// Unordered vertex pair with u < v.
struct EdgeKey {
  Vertex u = 0;
  Vertex v = 0;

  EdgeKey() = default;
  EdgeKey(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Label label;
  Multiplicity mult = 1;

  EdgeKey key() const { return {u, v}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// The canonical label "(u,v)" of the edge {u,v}.
Label canonical_label(Vertex u, Vertex v);

// A labelled graph with edge multiplicities on the vertex set {1,...,n}.
//
// Parallel edges never appear as separate records: they are folded into one
// edge whose multiplicity is the sum. The label set is exactly the image of
// the labeling, so it is derived from the edges rather than stored.
class Graph {
 public:
  Graph() = default;
  // Validates and normalizes: endpoints are swapped into u < v and edges are
  // sorted by (u, v). Throws GraphError on loops, out-of-range endpoints,
  // duplicate pairs, empty labels or zero multiplicities.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Labels in order of first appearance along the sorted edge list.
  std::vector<Label> labels() const;
  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  // Canonical labeling and trivial multiplicity.
  bool is_classical() const;
  bool has_canonical_labels() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

enum class CollapseKind { Simple, Singular };

const char* to_string(CollapseKind kind);

struct CollapseResult {
  Graph graph;
  CollapseKind kind = CollapseKind::Simple;
  // Where each label of the input graph ended up.
  LabelMap labels;
  // The vertex that was kept and the one that was removed (input numbering).
  Vertex kept = 0;
  Vertex removed = 0;
};

struct UnionResult {
  Graph graph;
  LabelMap left_labels;
  LabelMap right_labels;
};

Graph classical_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

// perm[v-1] is the new name of vertex v. Labels and multiplicities travel
// with their edges unchanged.
Graph permute_vertices(const Graph& g, std::span<const Vertex> perm);

Graph set_multiplicities(const Graph& g, const std::map<EdgeKey, Multiplicity>& sigma);

// Every edge labelled `from` is relabelled `to`.
Graph merge_labels(const Graph& g, const Label& from, const Label& to);

// Vertices of h are shifted by g.vertex_count(). Labels that name their own
// edge ("(u,v)" on the edge {u,v}) are renamed to follow the shifted edge;
// every other label is qualified with "g." or "h." so the two label sets stay
// disjoint.
UnionResult disjoint_union_tracked(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// Identifies vertices i and j. The smaller of the two survives, the larger
// is removed and every vertex above it is renumbered down by one. Edges that
// become parallel are merged with summed multiplicity, and the label of the
// vanishing edge is replaced everywhere by the label of the surviving one.
CollapseResult collapse(const Graph& g, Vertex i, Vertex j);

// Gluing at v (in g) and w (in h): collapse of the disjoint union.
Graph clique_zero_sum(const Graph& g, const Graph& h, Vertex v, Vertex w);

}  // namespace cutideal
