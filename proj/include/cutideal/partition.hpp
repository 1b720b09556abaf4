#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutideal/graph.hpp"

namespace cutideal {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bit v-1 stands for vertex v.
using VertexSet = std::uint64_t;

// Largest ground set a Partition can encode.
inline constexpr int kMaxPartitionVertices = 63;

// An unordered bipartition A|B of {1,...,n}.
//
// Stored as the side that contains vertex 1, so A|B and B|A have one
// encoding. Partitions of the same ground set are ordered by that bitmask;
// this is the variable order of every ring and the column order of every
// exponent matrix.
class Partition {
 public:
  Partition() = default;
  // `side` may be either block; it is flipped if it misses vertex 1.
  Partition(int n, VertexSet side);

  // Partition at position `index` of the order on Pi_n.
  static Partition from_index(int n, std::size_t index);

  int ground_size() const { return n_; }
  VertexSet side() const { return side_; }
  VertexSet other_side() const { return full() & ~side_; }
  VertexSet full() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }
  std::size_t index() const { return static_cast<std::size_t>(side_ >> 1); }

  bool in_side(Vertex v) const { return (side_ >> (v - 1)) & 1U; }
  bool same_side(Vertex a, Vertex b) const { return in_side(a) == in_side(b); }
  bool separates(Vertex a, Vertex b) const { return !same_side(a, b); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  VertexSet side_ = 0;
};

// Number of partitions of an n-set into two unordered blocks, 2^(n-1).
std::size_t partition_count(int n);

// All of Pi_n in partition order.
std::vector<Partition> all_partitions(int n);

// Edges of g with endpoints on opposite sides of p.
std::vector<Edge> cut(const Graph& g, const Partition& p);

// True iff i and j sit on the same side of p, i.e. r_p survives the
// collapse of i and j.
bool is_feasible(const Partition& p, Vertex i, Vertex j);

// Lifts of a partition of the collapsed ground set back to [n]. The
// collapse keeps min(i,j) and removes max(i,j); the feasible lift puts the
// removed vertex next to the kept one, the non-feasible lift opposite it.
Partition lift_feasible(const Partition& p, Vertex i, Vertex j);
Partition lift_nonfeasible(const Partition& p, Vertex i, Vertex j);

// Drops `removed` from the ground set and renumbers the vertices above it.
Partition project(const Partition& p, Vertex removed);

// a x b (or a x b* when `star`) on the disjoint union of the ground sets,
// with b's vertices shifted past a's.
Partition product_partition(const Partition& a, const Partition& b, bool star);

struct ProductSplit {
  Partition left;
  Partition right;
  bool star = false;
};

// Inverse of product_partition: q == product_partition(left, right, star).
ProductSplit split_product(const Partition& q, int left_size);

// "13|24" style rendering: smaller block first (the block with vertex 1 on a
// tie), an empty block printed as ".", comma-separated vertices once n >= 10.
std::string to_string(const Partition& p);

// Accepts the rendering above in any block order, "|." / "|" / "|·" for the
// empty block, and comma-separated vertices.
Partition parse_partition(std::string_view text, int n);

}  // namespace cutideal
