#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cutideal/graph.hpp"
#include "cutideal/lattice.hpp"
#include "cutideal/toric.hpp"

namespace cutideal {

enum class TransformKind { MultiplicityBlock, RelabelBlock, CollapseSelector, ColumnMix };

const char* to_string(TransformKind kind);

struct TransformMatrix {
  TransformKind kind = TransformKind::MultiplicityBlock;
  IntMatrix matrix;
};

// diag(I_sigma, I_sigma) for a classical graph; rows and columns follow the
// edge order. Edges missing from `sigma` keep multiplicity 1.
TransformMatrix multiplicity_matrix(const Graph& classical, const std::map<EdgeKey, Multiplicity>& sigma);

// diag(B, B) with B(i, j) = 1 iff source label j is sent to target label i.
// Rows follow `target_order`, columns follow source.labels().
TransformMatrix relabel_matrix(const Graph& source, const LabelMap& labels,
                               const std::vector<Label>& target_order);
// The labeling of `target` read off edge by edge. Both graphs must have the
// same edges; the target labels must be a function of the source labels.
TransformMatrix relabel_matrix(const Graph& source, const Graph& target);

// 2^(n-1) x 2^(n-2) selector: column p has a single 1 in the row of its
// feasible lift.
TransformMatrix collapse_matrix(const Graph& g, Vertex i, Vertex j);

// Rows of mg followed by rows of mh; one column per pair (a, b), a-major.
// The column keys are the product partitions a x b.
ExponentMatrix mix_columns(const ExponentMatrix& mg, const ExponentMatrix& mh);

// Linear relations r_{a x b} - r_{a x b*} together with every composition of
// a binomial of I_G with a binomial of I_H of matching degrees up to
// `degree_bound`. Trivial binomials u - u are allowed on either side.
Ideal union_ideal(const Graph& g, const Graph& h, int degree_bound = 4);

// I_G with every variable r_{A|B} renamed to r_{A|B S} (S the m new isolated
// vertices n+1..n+m), plus the linear relations identifying all ways of
// splitting S across A|B.
Ideal union_with_isolated(const Graph& g, int m);

// Cut ideal of the collapse via elimination of the non-feasible variables
// and renaming of the feasible lifts.
Ideal collapse_ideal(const Graph& g, Vertex i, Vertex j);

// The kill/substitute rule applied literally to a generating set: drops any
// binomial with a non-feasible variable and renames the rest. Sound, but the
// result need not generate the collapsed ideal.
std::vector<Binomial> generator_level_collapse(std::span<const Binomial> gens, int n, Vertex i, Vertex j);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
  // "OK name" or "FAIL name" lines, each failure followed by its detail.
  std::string format() const;
};

Report verify_collapse(const Graph& g, Vertex i, Vertex j);
Report verify_union(const Graph& g, const Graph& h, int degree_bound = 4);
// Multiplicity invariance on the classical graph underlying g, for `cases`
// random multiplicity maps drawn from `seed`.
Report verify_multiplicity(const Graph& g, std::uint64_t seed, int cases = 5);
// Matrix identities: multiplicity and relabel blocks for g itself and for
// random multiplicities, collapse selectors for every admissible pair.
Report verify_matrices(const Graph& g, std::uint64_t seed);

}  // namespace cutideal
