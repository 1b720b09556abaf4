#pragma once

#include <string>
#include <string_view>

#include "cutideal/graph.hpp"
#include "cutideal/partition.hpp"
#include "cutideal/toric.hpp"

namespace cutideal {

// Graph files:
//   { "vertices": 3, "edges": [ { "u": 1, "v": 2, "label": "a", "mult": -1 }, ... ] }
// "label" defaults to the canonical "(u,v)", "mult" to 1.
Graph parse_graph_json(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string graph_to_json(const Graph& g);

// Binomial text: "r{1|23}*r{3|12} - r{2|13}*r{123|.}", powers as "r{1|23}^2",
// the empty monomial as "1". Whitespace is ignored.
std::string format_monomial(const Monomial& m, int n);
std::string format_binomial(const Binomial& b, int n);
Binomial parse_binomial(std::string_view text, int n);

// One binomial per line, or "(0)" for the zero ideal.
std::string format_ideal_text(const Ideal& ideal);

// Ideal JSON:
//   { "n": 3, "order": "degrevlex",
//     "generators": [ { "plus": { "1|23": 1, "3|12": 1 }, "minus": { ... } } ] }
std::string ideal_to_json(const Ideal& ideal);
Ideal parse_ideal_json(std::string_view text);

// Header line of partition strings, then one labelled line per row.
std::string format_matrix(const ExponentMatrix& m);

}  // namespace cutideal
