#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutideal/graph.hpp"
#include "cutideal/groebner.hpp"
#include "cutideal/lattice.hpp"
#include "cutideal/partition.hpp"

namespace cutideal {

// Row s_a (separated) or t_a (together) of an exponent matrix.
struct RowKey {
  Label label;
  bool separated = true;

  friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

std::string to_string(const RowKey& key);

// Exponent matrix of the monomial map r_p -> prod s^sigma prod t^sigma.
//
// Rows are all s-rows in label order followed by all t-rows in the same
// order; columns are the partitions of the ground set in partition order
// (mix_columns builds matrices with other column sets).
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(int n, std::vector<RowKey> rows, std::vector<Partition> cols, IntMatrix entries);

  int ground_size() const { return n_; }
  const std::vector<RowKey>& rows() const { return rows_; }
  const std::vector<Partition>& cols() const { return cols_; }
  const IntMatrix& entries() const { return entries_; }

  std::optional<std::size_t> row_index(const RowKey& key) const;
  std::optional<std::size_t> col_index(const Partition& p) const;
  std::vector<std::int64_t> column(std::size_t c) const { return entries_.column(c); }

  // Same matrix with every row label sent through `names`.
  ExponentMatrix with_renamed_rows(const LabelMap& names) const;
  // Rows permuted into `order`; throws unless `order` lists the same keys.
  ExponentMatrix with_row_order(const std::vector<RowKey>& order) const;

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<RowKey> rows_;
  std::vector<Partition> cols_;
  IntMatrix entries_;
};

ExponentMatrix exponent_matrix(const Graph& g);

// Nonzero exponents of the image of r_p.
using LaurentMonomial = std::map<RowKey, std::int64_t>;
LaurentMonomial image_monomial(const Graph& g, const Partition& p);

// Dimension of the affine cut variety.
std::size_t rank(const ExponentMatrix& m);

// Rows generate the kernel lattice of the matrix.
using LatticeBasis = IntMatrix;
LatticeBasis integer_kernel(const ExponentMatrix& m);

// A binomial ideal in the ring whose variables are the partitions of [n].
//
// Holds a generating set and the order it is meant for; when built by
// reduced_groebner the generators are the reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(int n, std::vector<Binomial> gens, TermOrder order = TermOrder::degrevlex(),
        bool reduced = false);

  int ground_size() const { return n_; }
  std::size_t variable_count() const { return vars_; }
  const std::vector<Binomial>& gens() const { return gens_; }
  const TermOrder& order() const { return order_; }
  bool is_reduced() const { return reduced_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  int n_ = 0;
  std::size_t vars_ = 0;
  std::vector<Binomial> gens_;
  TermOrder order_;
  bool reduced_ = false;
};

// Builds r^plus - r^minus from partition-indexed exponents.
Binomial make_binomial(int n, const std::map<Partition, Exponent>& plus,
                       const std::map<Partition, Exponent>& minus);

Ideal reduced_groebner(const Ideal& ideal, const TermOrder& order);

// The cut ideal of g, returned as its reduced degrevlex Groebner basis.
//
// A kernel basis of the exponent matrix gives the lattice basis ideal; it is
// homogenized with one extra variable and saturated one variable at a time
// (degrevlex with the target variable smallest, then divide it out), which
// also covers Laurent images from negative multiplicities.
Ideal toric_ideal(const Graph& g);

// r^u - r^v lies in the cut ideal iff A u == A v.
bool membership(const ExponentMatrix& m, const Binomial& b);
bool membership(const Graph& g, const Binomial& b);

// Groebner-basis membership test for an arbitrary binomial ideal.
bool contains(const Ideal& ideal, const Binomial& b);

// ideal intersected with the subring of the variables not in `kill`.
Ideal eliminate(const Ideal& ideal, const std::vector<Partition>& kill);

// Equality of reduced degrevlex Groebner bases. Throws on ring mismatch.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

}  // namespace cutideal
