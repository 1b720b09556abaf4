#include "cutideal/calculus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cutideal/io.hpp"

namespace cutideal {

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::MultiplicityBlock: return "multiplicity";
    case TransformKind::RelabelBlock: return "relabel";
    case TransformKind::CollapseSelector: return "collapse";
    case TransformKind::ColumnMix: return "mix";
  }
  return "?";
}

namespace {

IntMatrix block_diagonal(const IntMatrix& b) {
  IntMatrix out(2 * b.rows(), 2 * b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out(r, c) = b(r, c);
      out(r + b.rows(), c + b.cols()) = b(r, c);
    }
  return out;
}

void check_pair(int n, Vertex i, Vertex j) {
  if (i < 1 || j < 1 || i > n || j > n) throw GraphError("collapse vertex out of range");
  if (i == j) throw GraphError("cannot collapse a vertex with itself");
}

Monomial project_monomial(const Monomial& m, int n, Vertex removed) {
  Monomial out(partition_count(n - 1), 0);
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) out[project(Partition::from_index(n, k), removed).index()] = m[k];
  return out;
}

bool touches_nonfeasible(const Binomial& b, int n, Vertex i, Vertex j) {
  for (std::size_t k = 0; k < b.variable_count(); ++k)
    if (b.involves(k) && !is_feasible(Partition::from_index(n, k), i, j)) return true;
  return false;
}

// All exponent vectors in `vars` variables with total degree at most `bound`.
void monomials_up_to(std::size_t vars, int bound, Monomial& current, std::size_t var,
                     std::vector<Monomial>& out) {
  if (var == vars) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    current[var] = e;
    monomials_up_to(vars, bound - e, current, var + 1, out);
  }
  current[var] = 0;
}

std::vector<Monomial> monomials_up_to(std::size_t vars, int bound) {
  std::vector<Monomial> out;
  Monomial current(vars, 0);
  monomials_up_to(vars, bound, current, 0, out);
  return out;
}

// Variable indices of m with repetition, ascending.
std::vector<std::size_t> as_tuple(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < m.size(); ++k)
    for (Exponent e = 0; e < m[k]; ++e) out.push_back(k);
  return out;
}

struct SidePair {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

// Pairs (u, v) of monomials with equal image under `a`, grouped by degrees.
std::map<std::pair<int, int>, std::vector<SidePair>> equal_image_pairs(const ExponentMatrix& a, int bound,
                                                                      bool ordered) {
  std::map<std::vector<std::int64_t>, std::vector<Monomial>> by_image;
  for (Monomial& m : monomials_up_to(a.cols().size(), bound)) {
    std::vector<std::int64_t> u(m.begin(), m.end());
    by_image[multiply(a.entries(), u)].push_back(std::move(m));
  }
  std::map<std::pair<int, int>, std::vector<SidePair>> out;
  for (const auto& [image, group] : by_image) {
    for (std::size_t x = 0; x < group.size(); ++x)
      for (std::size_t y = ordered ? 0 : x; y < group.size(); ++y) {
        const int dx = degree(group[x]), dy = degree(group[y]);
        if (dx == 0 && dy == 0) continue;
        out[{dx, dy}].push_back({as_tuple(group[x]), as_tuple(group[y])});
      }
  }
  return out;
}

std::vector<std::vector<std::size_t>> distinct_permutations(std::vector<std::size_t> t) {
  std::vector<std::vector<std::size_t>> out;
  std::sort(t.begin(), t.end());
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::string pair_name(Vertex i, Vertex j) { return std::to_string(i) + "=" + std::to_string(j); }

std::string first_difference(const IntMatrix& got, const IntMatrix& want, const std::vector<RowKey>& rows,
                             const std::vector<Partition>& cols) {
  if (got.rows() != want.rows() || got.cols() != want.cols())
    return "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + " vs " +
           std::to_string(want.rows()) + "x" + std::to_string(want.cols());
  for (std::size_t r = 0; r < got.rows(); ++r)
    for (std::size_t c = 0; c < got.cols(); ++c)
      if (got(r, c) != want(r, c))
        return "entry (" + to_string(rows[r]) + ", " + to_string(cols[c]) + "): " + std::to_string(got(r, c)) +
               " vs " + std::to_string(want(r, c));
  return {};
}

std::string with_graph(const Graph& g, const std::string& what) {
  return "graph: " + graph_to_json(g) + "\n" + what;
}

// A generator of one ideal that the other ideal misses, for failure reports.
std::string ideal_difference(const Ideal& a, const Ideal& b) {
  const auto ga = groebner_basis(a.gens(), TermOrder::degrevlex());
  const auto gb = groebner_basis(b.gens(), TermOrder::degrevlex());
  for (const Binomial& x : ga)
    if (!reduces_to_zero(x, gb)) return "only in first: " + format_binomial(x, a.ground_size());
  for (const Binomial& x : gb)
    if (!reduces_to_zero(x, ga)) return "only in second: " + format_binomial(x, b.ground_size());
  return "bases differ";
}

Graph classical_underlying(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return classical_graph(g.vertex_count(), pairs);
}

std::map<EdgeKey, Multiplicity> random_sigma(const Graph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  static constexpr Multiplicity values[] = {-3, -2, -1, 1, 2, 3};
  std::map<EdgeKey, Multiplicity> sigma;
  for (const Edge& e : g.edges()) sigma[e.key()] = values[pick(rng)];
  return sigma;
}

std::string sigma_name(const std::map<EdgeKey, Multiplicity>& sigma) {
  std::string out = "sigma=(";
  bool first = true;
  for (const auto& [k, m] : sigma) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(m);
  }
  return out + ")";
}

}  // namespace

TransformMatrix multiplicity_matrix(const Graph& classical, const std::map<EdgeKey, Multiplicity>& sigma) {
  if (!classical.is_classical()) throw GraphError("multiplicity matrix needs a classical graph");
  const auto edges = classical.edges();
  for (const auto& [key, m] : sigma) {
    if (!classical.has_edge(key.u, key.v))
      throw GraphError("multiplicity given for a non-edge {" + std::to_string(key.u) + "," + std::to_string(key.v) + "}");
    if (m == 0) throw GraphError("multiplicity 0 on edge " + canonical_label(key.u, key.v));
  }
  IntMatrix block(edges.size(), edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto it = sigma.find(edges[k].key());
    block(k, k) = it == sigma.end() ? 1 : it->second;
  }
  return {TransformKind::MultiplicityBlock, block_diagonal(block)};
}

TransformMatrix relabel_matrix(const Graph& source, const LabelMap& labels, const std::vector<Label>& target_order) {
  const auto from = source.labels();
  std::map<Label, std::size_t> row_of;
  for (std::size_t r = 0; r < target_order.size(); ++r) row_of[target_order[r]] = r;
  IntMatrix block(target_order.size(), from.size());
  std::vector<bool> hit(target_order.size(), false);
  for (std::size_t c = 0; c < from.size(); ++c) {
    auto it = labels.find(from[c]);
    if (it == labels.end()) throw GraphError("label " + from[c] + " has no image");
    auto row = row_of.find(it->second);
    if (row == row_of.end()) throw GraphError("label " + it->second + " is not a target label");
    block(row->second, c) = 1;
    hit[row->second] = true;
  }
  for (std::size_t r = 0; r < target_order.size(); ++r)
    if (!hit[r]) throw GraphError("labeling is not surjective: " + target_order[r] + " is never used");
  return {TransformKind::RelabelBlock, block_diagonal(block)};
}

TransformMatrix relabel_matrix(const Graph& source, const Graph& target) {
  if (source.vertex_count() != target.vertex_count() || source.edge_count() != target.edge_count())
    throw GraphError("relabeling needs graphs with the same edges");
  LabelMap labels;
  for (std::size_t k = 0; k < source.edge_count(); ++k) {
    const Edge& s = source.edges()[k];
    const Edge& t = target.edges()[k];
    if (s.key() != t.key()) throw GraphError("relabeling needs graphs with the same edges");
    auto [it, fresh] = labels.emplace(s.label, t.label);
    if (!fresh && it->second != t.label)
      throw GraphError("label " + s.label + " is sent to both " + it->second + " and " + t.label);
  }
  return relabel_matrix(source, labels, target.labels());
}

TransformMatrix collapse_matrix(const Graph& g, Vertex i, Vertex j) {
  const int n = g.vertex_count();
  check_pair(n, i, j);
  if (g.has_edge(i, j)) throw GraphError("cannot collapse adjacent vertices " + std::to_string(i) + " and " + std::to_string(j));
  const auto small = all_partitions(n - 1);
  IntMatrix c(partition_count(n), small.size());
  for (std::size_t k = 0; k < small.size(); ++k) c(lift_feasible(small[k], i, j).index(), k) = 1;
  return {TransformKind::CollapseSelector, std::move(c)};
}

ExponentMatrix mix_columns(const ExponentMatrix& mg, const ExponentMatrix& mh) {
  std::vector<RowKey> rows = mg.rows();
  const std::set<RowKey> left(rows.begin(), rows.end());
  for (const RowKey& k : mh.rows()) {
    if (left.contains(k)) throw std::invalid_argument("row " + to_string(k) + " appears in both matrices");
    rows.push_back(k);
  }
  std::vector<Partition> cols;
  IntMatrix entries(rows.size(), mg.cols().size() * mh.cols().size());
  std::size_t c = 0;
  for (std::size_t a = 0; a < mg.cols().size(); ++a)
    for (std::size_t b = 0; b < mh.cols().size(); ++b, ++c) {
      cols.push_back(product_partition(mg.cols()[a], mh.cols()[b], false));
      for (std::size_t r = 0; r < mg.rows().size(); ++r) entries(r, c) = mg.entries()(r, a);
      for (std::size_t r = 0; r < mh.rows().size(); ++r) entries(mg.rows().size() + r, c) = mh.entries()(r, b);
    }
  return ExponentMatrix(mg.ground_size() + mh.ground_size(), std::move(rows), std::move(cols), std::move(entries));
}

Ideal union_ideal(const Graph& g, const Graph& h, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  const int ng = g.vertex_count(), nh = h.vertex_count(), n = ng + nh;
  const auto pg = all_partitions(ng), ph = all_partitions(nh);
  const std::size_t vars = partition_count(n);
  const TermOrder order = TermOrder::degrevlex();

  std::set<Binomial> found;
  auto add = [&](Monomial plus, Monomial minus) {
    if (plus == minus) return;
    found.insert(Binomial(std::move(plus), std::move(minus)).oriented(order));
  };
  auto unit = [&](std::size_t k) {
    Monomial m(vars, 0);
    m[k] = 1;
    return m;
  };

  for (const Partition& a : pg)
    for (const Partition& b : ph)
      add(unit(product_partition(a, b, false).index()), unit(product_partition(a, b, true).index()));

  const auto left = equal_image_pairs(exponent_matrix(g), degree_bound, false);
  const auto right = equal_image_pairs(exponent_matrix(h), degree_bound, true);
  auto compose = [&](const std::vector<std::size_t>& as, const std::vector<std::size_t>& bs) {
    Monomial m(vars, 0);
    for (std::size_t k = 0; k < as.size(); ++k) ++m[product_partition(pg[as[k]], ph[bs[k]], false).index()];
    return m;
  };
  for (const auto& [degrees, a_pairs] : left) {
    auto it = right.find(degrees);
    if (it == right.end()) continue;
    for (const SidePair& bp : it->second) {
      const auto left_perms = distinct_permutations(bp.left);
      const auto right_perms = distinct_permutations(bp.right);
      for (const SidePair& ap : a_pairs)
        for (const auto& bl : left_perms) {
          const Monomial plus = compose(ap.left, bl);
          for (const auto& br : right_perms) add(plus, compose(ap.right, br));
        }
    }
  }
  return Ideal(n, std::vector<Binomial>(found.begin(), found.end()));
}

Ideal union_with_isolated(const Graph& g, int m) {
  if (m < 0) throw std::invalid_argument("number of isolated vertices must be nonnegative");
  const int n = g.vertex_count(), total = n + m;
  if (total > kMaxPartitionVertices) throw std::invalid_argument("too many vertices");
  const std::size_t vars = partition_count(total);
  const VertexSet extra = ((VertexSet{1} << m) - 1) << n;
  auto lift = [&](const Monomial& mono) {
    Monomial out(vars, 0);
    for (std::size_t k = 0; k < mono.size(); ++k)
      if (mono[k] != 0) out[Partition(total, Partition::from_index(n, k).side()).index()] = mono[k];
    return out;
  };
  std::vector<Binomial> gens;
  const Ideal base_ideal = toric_ideal(g);
  for (const Binomial& b : base_ideal.gens()) gens.emplace_back(lift(b.plus()), lift(b.minus()));
  for (const Partition& p : all_partitions(n)) {
    Monomial base(vars, 0);
    base[Partition(total, p.side()).index()] = 1;
    for (VertexSet c = extra; c != 0; c = (c - 1) & extra) {
      Monomial moved(vars, 0);
      moved[Partition(total, p.side() | c).index()] = 1;
      gens.emplace_back(base, moved);
    }
  }
  return Ideal(total, std::move(gens));
}

Ideal collapse_ideal(const Graph& g, Vertex i, Vertex j) {
  const CollapseResult collapsed = collapse(g, i, j);
  const int n = g.vertex_count();
  std::vector<Partition> kill;
  for (const Partition& p : all_partitions(n))
    if (!is_feasible(p, i, j)) kill.push_back(p);
  const Ideal survivors = eliminate(toric_ideal(g), kill);
  std::vector<Binomial> renamed;
  for (const Binomial& b : survivors.gens())
    renamed.emplace_back(project_monomial(b.plus(), n, collapsed.removed),
                         project_monomial(b.minus(), n, collapsed.removed));
  return reduced_groebner(Ideal(n - 1, std::move(renamed)), TermOrder::degrevlex());
}

std::vector<Binomial> generator_level_collapse(std::span<const Binomial> gens, int n, Vertex i, Vertex j) {
  check_pair(n, i, j);
  const Vertex removed = std::max(i, j);
  std::vector<Binomial> out;
  for (const Binomial& b : gens) {
    if (b.variable_count() != partition_count(n)) throw std::invalid_argument("generator lives in the wrong ring");
    if (touches_nonfeasible(b, n, i, j)) continue;
    out.emplace_back(project_monomial(b.plus(), n, removed), project_monomial(b.minus(), n, removed));
  }
  return out;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string Report::format() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << (c.ok ? "OK   " : "FAIL ") << c.name << '\n';
    if (!c.ok && !c.detail.empty()) {
      std::istringstream lines(c.detail);
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
  }
  return out.str();
}

Report verify_collapse(const Graph& g, Vertex i, Vertex j) {
  Report report;
  const CollapseResult c = collapse(g, i, j);
  const std::string tag = "collapse " + pair_name(i, j);
  report.add(tag + " is " + to_string(c.kind), true);

  const ExponentMatrix a = exponent_matrix(g);
  const ExponentMatrix target = exponent_matrix(c.graph);
  const IntMatrix lhs =
      relabel_matrix(g, c.labels, c.graph.labels()).matrix * a.entries() * collapse_matrix(g, i, j).matrix;
  const std::string diff = first_difference(lhs, target.entries(), target.rows(), target.cols());
  report.add(tag + ": R * A * C equals the collapsed exponent matrix", diff.empty(), with_graph(g, diff));

  const Ideal via_rule = collapse_ideal(g, i, j);
  const Ideal direct = toric_ideal(c.graph);
  const bool same = ideal_equal(via_rule, direct);
  report.add(tag + ": kill/substitute ideal equals the direct cut ideal", same,
             same ? "" : with_graph(g, ideal_difference(via_rule, direct)));

  const auto literal = generator_level_collapse(toric_ideal(g).gens(), g.vertex_count(), i, j);
  std::string bad;
  for (const Binomial& b : literal)
    if (!membership(c.graph, b)) {
      bad = "not in the collapsed ideal: " + format_binomial(b, c.graph.vertex_count());
      break;
    }
  report.add(tag + ": " + std::to_string(literal.size()) + " surviving generators lie in the collapsed ideal",
             bad.empty(), with_graph(g, bad));
  return report;
}

Report verify_union(const Graph& g, const Graph& h, int degree_bound) {
  Report report;
  const int ng = g.vertex_count(), nh = h.vertex_count();
  const UnionResult u = disjoint_union_tracked(g, h);
  const ExponentMatrix au = exponent_matrix(u.graph);
  const ExponentMatrix mix_raw = mix_columns(exponent_matrix(g).with_renamed_rows(u.left_labels),
                                             exponent_matrix(h).with_renamed_rows(u.right_labels));
  const std::size_t nhp = partition_count(nh);

  {
    const ExponentMatrix mix = mix_raw.with_row_order(au.rows());
    std::vector<int> hits(mix.cols().size(), 0);
    std::string bad;
    for (std::size_t c = 0; c < au.cols().size() && bad.empty(); ++c) {
      const ProductSplit s = split_product(au.cols()[c], ng);
      const std::size_t k = s.left.index() * nhp + s.right.index();
      ++hits[k];
      if (au.column(c) != mix.column(k)) bad = "column " + to_string(au.cols()[c]) + " differs from its mix column";
    }
    for (std::size_t k = 0; k < hits.size() && bad.empty(); ++k)
      if (hits[k] != 2) bad = "mix column " + to_string(mix.cols()[k]) + " used " + std::to_string(hits[k]) + " times";
    report.add("union columns are the mixed columns, each twice", bad.empty(),
               with_graph(u.graph, bad));
  }

  const CollapseResult z = collapse(u.graph, 1, ng + 1);
  const ExponentMatrix az = exponent_matrix(z.graph);
  {
    const ExponentMatrix mix = mix_raw.with_renamed_rows(z.labels).with_row_order(az.rows());
    std::vector<int> hits(mix.cols().size(), 0);
    std::string bad;
    for (std::size_t c = 0; c < az.cols().size() && bad.empty(); ++c) {
      const ProductSplit s = split_product(lift_feasible(az.cols()[c], 1, ng + 1), ng);
      const std::size_t k = s.left.index() * nhp + s.right.index();
      ++hits[k];
      if (az.column(c) != mix.column(k)) bad = "column " + to_string(az.cols()[c]) + " differs from its mix column";
    }
    for (std::size_t k = 0; k < hits.size() && bad.empty(); ++k)
      if (hits[k] != 1) bad = "mix column " + to_string(mix.cols()[k]) + " used " + std::to_string(hits[k]) + " times";
    report.add("0-sum columns are the mixed columns, each once", bad.empty(), with_graph(z.graph, bad));
  }

  const std::size_t ru = rank(au), rz = rank(az);
  report.add("rank of union (" + std::to_string(ru) + ") equals rank of 0-sum (" + std::to_string(rz) + ")", ru == rz,
             with_graph(u.graph, ""));

  const Ideal composed = union_ideal(g, h, degree_bound);
  std::string bad;
  for (const Binomial& b : composed.gens())
    if (!membership(au, b)) {
      bad = "not in the union ideal: " + format_binomial(b, ng + nh);
      break;
    }
  report.add(std::to_string(composed.gens().size()) + " composed binomials lie in the union ideal", bad.empty(),
             with_graph(u.graph, bad));

  const Ideal direct = toric_ideal(u.graph);
  const bool same = ideal_equal(composed, direct);
  report.add("composed ideal (degree <= " + std::to_string(degree_bound) + ") equals the direct cut ideal", same,
             same ? "" : with_graph(u.graph, ideal_difference(composed, direct)));
  return report;
}

Report verify_multiplicity(const Graph& g, std::uint64_t seed, int cases) {
  Report report;
  const Graph base = classical_underlying(g);
  const ExponentMatrix a = exponent_matrix(base);
  const Ideal ideal = toric_ideal(base);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    const auto sigma = random_sigma(base, rng);
    const Graph weighted = set_multiplicities(base, sigma);
    const ExponentMatrix target = exponent_matrix(weighted);
    const IntMatrix lhs = multiplicity_matrix(base, sigma).matrix * a.entries();
    const std::string diff = first_difference(lhs, target.entries(), target.rows(), target.cols());
    report.add(sigma_name(sigma) + ": M * A equals the weighted exponent matrix", diff.empty(),
               with_graph(weighted, diff));
    const Ideal other = toric_ideal(weighted);
    const bool same = ideal_equal(ideal, other);
    report.add(sigma_name(sigma) + ": weighted cut ideal equals the classical one", same,
               same ? "" : with_graph(weighted, ideal_difference(ideal, other)));
  }
  return report;
}

Report verify_matrices(const Graph& g, std::uint64_t seed) {
  Report report;
  const Graph base = classical_underlying(g);
  const ExponentMatrix a = exponent_matrix(base);
  const ExponentMatrix ag = exponent_matrix(g);

  std::map<EdgeKey, Multiplicity> own;
  for (const Edge& e : g.edges()) own[e.key()] = e.mult;
  const IntMatrix lhs = relabel_matrix(base, g).matrix * multiplicity_matrix(base, own).matrix * a.entries();
  const std::string diff = first_difference(lhs, ag.entries(), ag.rows(), ag.cols());
  report.add("R * M * A of the classical graph equals A", diff.empty(), with_graph(g, diff));

  std::mt19937_64 rng(seed);
  for (int k = 0; k < 3; ++k) {
    const auto sigma = random_sigma(base, rng);
    const ExponentMatrix target = exponent_matrix(set_multiplicities(base, sigma));
    const IntMatrix m = multiplicity_matrix(base, sigma).matrix * a.entries();
    const std::string d = first_difference(m, target.entries(), target.rows(), target.cols());
    report.add(sigma_name(sigma) + ": M * A equals the weighted exponent matrix", d.empty(), with_graph(g, d));
  }

  const int n = g.vertex_count();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      if (g.has_edge(i, j)) continue;
      CollapseResult c;
      try {
        c = collapse(g, i, j);
      } catch (const GraphError&) {
        continue;  // merged multiplicities cancel
      }
      const ExponentMatrix target = exponent_matrix(c.graph);
      const IntMatrix prod =
          relabel_matrix(g, c.labels, c.graph.labels()).matrix * ag.entries() * collapse_matrix(g, i, j).matrix;
      const std::string d = first_difference(prod, target.entries(), target.rows(), target.cols());
      report.add("collapse " + pair_name(i, j) + " (" + to_string(c.kind) + "): R * A * C equals the collapsed matrix",
                 d.empty(), with_graph(g, d));
    }
  return report;
}

}  // namespace cutideal
