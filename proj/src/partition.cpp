#include "cutideal/partition.hpp"

#include <bit>
#include <cctype>

namespace cutideal {

namespace {

void require_ground(int n) {
  if (n < 1) throw std::invalid_argument("partitions need a nonempty ground set");
  if (n > kMaxPartitionVertices)
    throw std::invalid_argument("ground set too large: " + std::to_string(n));
}

VertexSet bit(Vertex v) { return VertexSet{1} << (v - 1); }

// Inserts a zero bit at position v-1; bits at and above it move up.
VertexSet open_slot(VertexSet s, Vertex v) {
  const VertexSet low = s & (bit(v) - 1);
  const VertexSet high = (s >> (v - 1)) << v;
  return low | high;
}

std::string render_block(VertexSet block, int n) {
  if (block == 0) return ".";
  std::string out;
  for (Vertex v = 1; v <= n; ++v) {
    if (!(block & bit(v))) continue;
    if (n >= 10 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

VertexSet parse_block(std::string_view text, int n, std::string_view whole) {
  text = trim(text);
  if (text.empty() || text == "." || text == "\xC2\xB7") return 0;
  auto fail = [&](const std::string& why) {
    return ParseError("bad partition '" + std::string(whole) + "': " + why);
  };
  std::vector<std::string_view> tokens;
  if (text.find(',') != std::string_view::npos || n >= 10) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      tokens.push_back(trim(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t k = 0; k < text.size(); ++k) tokens.push_back(text.substr(k, 1));
  }
  VertexSet block = 0;
  for (std::string_view tok : tokens) {
    if (tok.empty()) throw fail("empty vertex");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw fail("unexpected character '" + std::string(1, c) + "'");
      v = v * 10 + (c - '0');
      if (v > n) break;
    }
    if (v < 1 || v > n) throw fail("vertex " + std::string(tok) + " out of range");
    if (block & bit(v)) throw fail("vertex " + std::string(tok) + " repeated");
    block |= bit(v);
  }
  return block;
}

}  // namespace

Partition::Partition(int n, VertexSet side) : n_(n) {
  require_ground(n);
  side &= full();
  side_ = (side & 1U) ? side : (full() & ~side);
}

Partition Partition::from_index(int n, std::size_t index) {
  require_ground(n);
  if (index >= partition_count(n)) throw std::out_of_range("partition index out of range");
  return Partition(n, (static_cast<VertexSet>(index) << 1) | 1U);
}

std::size_t partition_count(int n) {
  require_ground(n);
  if (n > 40) throw std::invalid_argument("too many partitions to enumerate");
  return std::size_t{1} << (n - 1);
}

std::vector<Partition> all_partitions(int n) {
  const std::size_t count = partition_count(n);
  std::vector<Partition> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(Partition::from_index(n, k));
  return out;
}

std::vector<Edge> cut(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.vertex_count())
    throw std::invalid_argument("partition and graph have different vertex counts");
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (p.separates(e.u, e.v)) out.push_back(e);
  return out;
}

bool is_feasible(const Partition& p, Vertex i, Vertex j) { return p.same_side(i, j); }

Partition lift_feasible(const Partition& p, Vertex i, Vertex j) {
  const Vertex keep = std::min(i, j);
  const Vertex gone = std::max(i, j);
  const int n = p.ground_size() + 1;
  if (keep < 1 || gone > n || keep == gone) throw std::invalid_argument("bad lift vertices");
  VertexSet s = open_slot(p.side(), gone);
  if (p.in_side(keep)) s |= bit(gone);
  return Partition(n, s);
}

Partition lift_nonfeasible(const Partition& p, Vertex i, Vertex j) {
  const Vertex keep = std::min(i, j);
  const Vertex gone = std::max(i, j);
  const int n = p.ground_size() + 1;
  if (keep < 1 || gone > n || keep == gone) throw std::invalid_argument("bad lift vertices");
  VertexSet s = open_slot(p.side(), gone);
  if (!p.in_side(keep)) s |= bit(gone);
  return Partition(n, s);
}

Partition project(const Partition& p, Vertex removed) {
  const int n = p.ground_size();
  if (n < 2 || removed < 1 || removed > n) throw std::invalid_argument("bad projection");
  const VertexSet s = p.side();
  const VertexSet low = s & (bit(removed) - 1);
  const VertexSet high = (s >> removed) << (removed - 1);
  return Partition(n - 1, low | high);
}

Partition product_partition(const Partition& a, const Partition& b, bool star) {
  const int n = a.ground_size();
  const int m = b.ground_size();
  if (n + m > kMaxPartitionVertices) throw std::invalid_argument("product ground set too large");
  const VertexSet right = star ? b.other_side() : b.side();
  return Partition(n + m, a.side() | (right << n));
}

ProductSplit split_product(const Partition& q, int left_size) {
  const int m = q.ground_size() - left_size;
  if (left_size < 1 || m < 1) throw std::invalid_argument("bad product split");
  const VertexSet left_mask = (VertexSet{1} << left_size) - 1;
  ProductSplit out;
  out.left = Partition(left_size, q.side() & left_mask);
  const VertexSet right = q.side() >> left_size;
  out.right = Partition(m, right);
  out.star = out.right.side() != right;
  return out;
}

std::string to_string(const Partition& p) {
  const int n = p.ground_size();
  VertexSet first = p.side();
  VertexSet second = p.other_side();
  const int a = std::popcount(first);
  const int b = std::popcount(second);
  if (b != 0 && b < a) std::swap(first, second);
  return render_block(first, n) + "|" + render_block(second, n);
}

Partition parse_partition(std::string_view text, int n) {
  require_ground(n);
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("bad partition '" + std::string(text) + "': expected exactly one '|'");
  const VertexSet a = parse_block(text.substr(0, bar), n, text);
  const VertexSet b = parse_block(text.substr(bar + 1), n, text);
  if (a & b) throw ParseError("bad partition '" + std::string(text) + "': blocks overlap");
  if ((a | b) != Partition(n, 1).full())
    throw ParseError("bad partition '" + std::string(text) + "': blocks do not cover 1.." +
                     std::to_string(n));
  return Partition(n, a);
}

}  // namespace cutideal
