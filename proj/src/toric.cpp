#include "cutideal/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cutideal {

std::string to_string(const RowKey& key) { return (key.separated ? "s_" : "t_") + key.label; }

// ---------------------------------------------------------------------------
// ExponentMatrix

ExponentMatrix::ExponentMatrix(int n, std::vector<RowKey> rows, std::vector<Partition> cols,
                               IntMatrix entries)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  if (entries_.rows() != rows_.size() || (entries_.cols() != cols_.size() && !rows_.empty()))
    throw std::invalid_argument("exponent matrix shape does not match its keys");
  if (rows_.empty()) entries_ = IntMatrix(0, cols_.size());
}

std::optional<std::size_t> ExponentMatrix::row_index(const RowKey& key) const {
  auto it = std::find(rows_.begin(), rows_.end(), key);
  if (it == rows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

std::optional<std::size_t> ExponentMatrix::col_index(const Partition& p) const {
  auto it = std::find(cols_.begin(), cols_.end(), p);
  if (it == cols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cols_.begin());
}

ExponentMatrix ExponentMatrix::with_renamed_rows(const LabelMap& names) const {
  std::vector<RowKey> rows = rows_;
  for (RowKey& key : rows) {
    auto it = names.find(key.label);
    if (it == names.end()) throw std::invalid_argument("no new name for label " + key.label);
    key.label = it->second;
  }
  return ExponentMatrix(n_, std::move(rows), cols_, entries_);
}

ExponentMatrix ExponentMatrix::with_row_order(const std::vector<RowKey>& order) const {
  if (order.size() != rows_.size()) throw std::invalid_argument("row order has the wrong size");
  IntMatrix out(order.size(), cols_.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto src = row_index(order[r]);
    if (!src) throw std::invalid_argument("unknown row " + to_string(order[r]));
    for (std::size_t c = 0; c < cols_.size(); ++c) out(r, c) = entries_(*src, c);
  }
  return ExponentMatrix(n_, order, cols_, std::move(out));
}

ExponentMatrix exponent_matrix(const Graph& g) {
  const int n = g.vertex_count();
  const auto labels = g.labels();
  std::vector<RowKey> rows;
  for (const Label& l : labels) rows.push_back({l, true});
  for (const Label& l : labels) rows.push_back({l, false});
  std::map<Label, std::size_t> row_of;
  for (std::size_t k = 0; k < labels.size(); ++k) row_of[labels[k]] = k;

  auto cols = all_partitions(n);
  IntMatrix entries(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const Edge& e : g.edges()) {
      const std::size_t r = row_of[e.label] + (cols[c].separates(e.u, e.v) ? 0 : labels.size());
      if (__builtin_add_overflow(entries(r, c), e.mult, &entries(r, c)))
        throw std::overflow_error("exponent matrix entry overflows");
    }
  }
  return ExponentMatrix(n, std::move(rows), std::move(cols), std::move(entries));
}

LaurentMonomial image_monomial(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.vertex_count())
    throw std::invalid_argument("partition and graph have different vertex counts");
  LaurentMonomial out;
  for (const Edge& e : g.edges()) out[{e.label, p.separates(e.u, e.v)}] += e.mult;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::size_t rank(const ExponentMatrix& m) { return rank(m.entries()); }

LatticeBasis integer_kernel(const ExponentMatrix& m) { return integer_kernel(m.entries()); }

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(int n, std::vector<Binomial> gens, TermOrder order, bool reduced)
    : n_(n), vars_(partition_count(n)), gens_(std::move(gens)), order_(std::move(order)),
      reduced_(reduced) {
  for (const Binomial& b : gens_)
    if (b.variable_count() != vars_)
      throw std::invalid_argument("generator has " + std::to_string(b.variable_count()) +
                                  " variables, ring has " + std::to_string(vars_));
}

Binomial make_binomial(int n, const std::map<Partition, Exponent>& plus,
                       const std::map<Partition, Exponent>& minus) {
  const std::size_t vars = partition_count(n);
  Monomial p(vars, 0), m(vars, 0);
  for (const auto& [part, e] : plus) {
    if (part.ground_size() != n) throw std::invalid_argument("partition over the wrong ground set");
    p[part.index()] += e;
  }
  for (const auto& [part, e] : minus) {
    if (part.ground_size() != n) throw std::invalid_argument("partition over the wrong ground set");
    m[part.index()] += e;
  }
  return Binomial(std::move(p), std::move(m));
}

Ideal reduced_groebner(const Ideal& ideal, const TermOrder& order) {
  return Ideal(ideal.ground_size(), groebner_basis(ideal.gens(), order), order, true);
}

namespace {

// Divides every generator by the largest power of `var` dividing both terms.
std::vector<Binomial> divide_out(const std::vector<Binomial>& gens, std::size_t var) {
  std::vector<Binomial> out;
  out.reserve(gens.size());
  for (const Binomial& b : gens) {
    Monomial p = b.plus(), m = b.minus();
    const Exponent common = std::min(p[var], m[var]);
    p[var] -= common;
    m[var] -= common;
    out.emplace_back(std::move(p), std::move(m));
  }
  return out;
}

}  // namespace

Ideal toric_ideal(const Graph& g) {
  const int n = g.vertex_count();
  const ExponentMatrix a = exponent_matrix(g);
  const LatticeBasis kernel = integer_kernel(a);
  const std::size_t vars = a.cols().size();

  // Homogenize: the extra last coordinate makes every binomial degree-balanced.
  std::vector<Binomial> gens;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    std::vector<std::int64_t> u(kernel.row(r).begin(), kernel.row(r).end());
    u.push_back(-std::accumulate(u.begin(), u.end(), std::int64_t{0}));
    gens.push_back(binomial_from_vector(u));
  }

  for (std::size_t var = 0; var <= vars; ++var) {
    if (std::none_of(gens.begin(), gens.end(), [var](const Binomial& b) { return b.involves(var); }))
      continue;
    gens = divide_out(groebner_basis(gens, TermOrder::degrevlex_smallest(var)), var);
  }

  std::vector<Binomial> affine;
  for (const Binomial& b : gens) {
    Monomial p(b.plus().begin(), b.plus().end() - 1);
    Monomial m(b.minus().begin(), b.minus().end() - 1);
    if (p != m) affine.emplace_back(std::move(p), std::move(m));
  }
  return reduced_groebner(Ideal(n, std::move(affine)), TermOrder::degrevlex());
}

bool membership(const ExponentMatrix& m, const Binomial& b) {
  if (b.variable_count() != m.cols().size())
    throw std::invalid_argument("binomial lives in a ring of the wrong size");
  const auto image = multiply(m.entries(), b.difference());
  return std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; });
}

bool membership(const Graph& g, const Binomial& b) { return membership(exponent_matrix(g), b); }

bool contains(const Ideal& ideal, const Binomial& b) {
  if (b.variable_count() != ideal.variable_count())
    throw std::invalid_argument("binomial lives in a ring of the wrong size");
  const auto gb = ideal.is_reduced() ? ideal.gens() : groebner_basis(ideal.gens(), ideal.order());
  return reduces_to_zero(b, gb);
}

Ideal eliminate(const Ideal& ideal, const std::vector<Partition>& kill) {
  if (kill.empty()) return ideal;
  std::vector<std::size_t> block;
  for (const Partition& p : kill) {
    if (p.ground_size() != ideal.ground_size())
      throw std::invalid_argument("eliminated variable from the wrong ring");
    block.push_back(p.index());
  }
  auto gb = groebner_basis(ideal.gens(), TermOrder::elimination(block));
  std::vector<Binomial> kept;
  for (Binomial& b : gb)
    if (std::none_of(block.begin(), block.end(), [&b](std::size_t v) { return b.involves(v); }))
      kept.push_back(std::move(b));
  return Ideal(ideal.ground_size(), std::move(kept));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ground_size() != b.ground_size()) throw std::invalid_argument("ideals live in different rings");
  const TermOrder order = TermOrder::degrevlex();
  return groebner_basis(a.gens(), order) == groebner_basis(b.gens(), order);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.ground_size() != b.ground_size()) throw std::invalid_argument("ideals live in different rings");
  std::vector<Binomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ground_size(), std::move(gens), a.order());
}

}  // namespace cutideal
