#pragma once

#include <string>
#include <vector>

#include "cutideal/graph.hpp"
#include "cutideal/io.hpp"
#include "cutideal/toric.hpp"

namespace fixtures {

using namespace cutideal;

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(v, v + 1);
  return classical_graph(n, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  return classical_graph(n, pairs);
}

inline Graph empty(int n) { return Graph(n, {}); }

// P3 with both edges labelled a.
inline Graph p3_single_label() { return Graph(3, {{1, 2, "a", 1}, {2, 3, "a", 1}}); }

// Same labeling, multiplicities -1 on {1,2} and 1 on {2,3}.
inline Graph p3_single_label_weighted() { return Graph(3, {{1, 2, "a", -1}, {2, 3, "a", 1}}); }

// Triangle with a pendant path 4-5 hanging off vertex 4.
inline Graph five_vertex() { return classical_graph(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}); }

// Kill/substitute loses generators here: collapsing 1 and 3 merges b into a,
// which is also used on other edges.
inline Graph nonclassical_singular() {
  return Graph(4, {{1, 2, "a", 1}, {1, 4, "a", 1}, {2, 3, "b", 1}, {2, 4, "a", 1}});
}

inline std::vector<Binomial> parse_all(const std::vector<std::string>& texts, int n) {
  std::vector<Binomial> out;
  for (const auto& t : texts) out.push_back(parse_binomial(t, n));
  return out;
}

inline Ideal ideal_of(const std::vector<std::string>& texts, int n) { return Ideal(n, parse_all(texts, n)); }

inline const std::vector<std::string> p3_gens = {"r{1|23}*r{3|12} - r{2|13}*r{123|.}"};

inline const std::vector<std::string> p3_single_label_gens = {
    "r{1|23} - r{3|12}",
    "r{1|23}*r{3|12} - r{2|13}*r{123|.}",
};

inline const std::vector<std::string> p3_weighted_gens = {
    "r{2|13} - 1",
    "r{123|.} - 1",
    "r{1|23}*r{3|12} - 1",
};

inline const std::vector<std::string> k2_k2_gens = {
    "r{1|234}*r{3|124} - r{24|13}*r{1234|.}",
    "r{1234|.} - r{12|34}",
    "r{4|123} - r{3|124}",
    "r{2|134} - r{1|234}",
    "r{13|24} - r{14|23}",
};

inline const std::vector<std::string> p4_gens = {
    "r{13|24}*r{12|34} - r{2|134}*r{3|124}",
    "r{4|123}*r{12|34} - r{1234|.}*r{3|124}",
    "r{1|234}*r{3|124} - r{12|34}*r{14|23}",
    "r{1|234}*r{13|24} - r{2|134}*r{14|23}",
    "r{1|234}*r{4|123} - r{1234|.}*r{14|23}",
    "r{4|123}*r{13|24} - r{14|23}*r{3|124}",
    "r{1|234}*r{3|124} - r{4|123}*r{2|134}",
    "r{1|234}*r{3|124} - r{13|24}*r{1234|.}",
    "r{1|234}*r{12|34} - r{1234|.}*r{2|134}",
};

// Non-linear generators of P3 + K2 (K2 on vertices 4, 5) built by composition.
inline const std::vector<std::string> p3_k2_composed = {
    "r{24|135}*r{345|12} - r{2|1345}*r{35|124}",
    "r{4|1235}*r{12|345} - r{12345|.}*r{35|124}",
    "r{1|2345}*r{35|124} - r{12|345}*r{14|235}",
    "r{1|2345}*r{135|24} - r{2|1345}*r{14|235}",
    "r{1|2345}*r{4|1235} - r{12345|.}*r{14|235}",
    "r{1|2345}*r{345|12} - r{12345|.}*r{2|1345}",
    "r{4|1235}*r{135|24} - r{14|235}*r{35|124}",
    "r{1|2345}*r{35|124} - r{4|1235}*r{2|1345}",
    "r{1|2345}*r{35|124} - r{12345|.}*r{135|24}",
};

inline const std::vector<std::string> five_vertex_gens = {
    "r{13|245}*r{4|1235} - r{123|45}*r{24|135}",
    "r{12|345}*r{24|135} - r{13|245}*r{34|125}",
    "r{12|345}*r{4|1235} - r{123|45}*r{34|125}",
    "r{12|345}*r{13|245} - r{2|1345}*r{3|1245}",
    "r{124|35}*r{2|1345} - r{12|345}*r{24|135}",
    "r{124|35}*r{123|45} - r{3|1245}*r{4|1235}",
    "r{124|35}*r{13|245} - r{3|1245}*r{24|135}",
    "r{124|35}*r{12|345} - r{3|1245}*r{34|125}",
    "r{14|235}*r{3|1245} - r{124|35}*r{23|145}",
    "r{14|235}*r{123|45} - r{23|145}*r{4|1235}",
    "r{14|235}*r{13|245} - r{23|145}*r{24|135}",
    "r{14|235}*r{12|345} - r{23|145}*r{34|125}",
    "r{134|25}*r{23|145} - r{14|235}*r{2|1345}",
    "r{134|25}*r{3|1245} - r{12|345}*r{24|135}",
    "r{134|25}*r{123|45} - r{2|1345}*r{4|1235}",
    "r{134|25}*r{13|245} - r{2|1345}*r{24|135}",
    "r{134|25}*r{12|345} - r{2|1345}*r{34|125}",
    "r{134|25}*r{124|35} - r{34|125}*r{24|135}",
    "r{5|1234}*r{2|1345} - r{134|25}*r{12345|.}",
    "r{5|1234}*r{3|1245} - r{124|35}*r{12345|.}",
    "r{5|1234}*r{123|45} - r{12345|.}*r{4|1235}",
    "r{5|1234}*r{13|245} - r{12345|.}*r{24|135}",
    "r{5|1234}*r{12|345} - r{12345|.}*r{34|125}",
    "r{5|1234}*r{14|235} - r{15|234}*r{4|1235}",
    "r{1|2345}*r{4|1235} - r{5|1234}*r{23|145}",
    "r{1|2345}*r{4|1235} - r{14|235}*r{12345|.}",
    "r{1|2345}*r{34|125} - r{12|345}*r{15|234}",
    "r{1|2345}*r{24|135} - r{13|245}*r{15|234}",
    "r{1|2345}*r{4|1235} - r{123|45}*r{15|234}",
    "r{1|2345}*r{123|45} - r{12345|.}*r{23|145}",
    "r{1|2345}*r{124|35} - r{3|1245}*r{15|234}",
    "r{1|2345}*r{14|235} - r{23|145}*r{15|234}",
    "r{1|2345}*r{134|25} - r{2|1345}*r{15|234}",
    "r{1|2345}*r{5|1234} - r{12345|.}*r{15|234}",
};

inline const std::vector<std::string> k4_gens = {
    "r{1|234}*r{2|134}*r{3|124}*r{4|123} - r{1234|.}*r{23|14}*r{12|34}*r{13|24}",
};

}  // namespace fixtures
