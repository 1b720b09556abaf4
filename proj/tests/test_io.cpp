#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cutideal;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_graph_json(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph JSON with defaults") {
  const Graph g = parse_graph_json(R"({"vertices": 3, "edges": [{"u": 2, "v": 1}, {"u": 2, "v": 3, "label": "a", "mult": -2}]})");
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0].u == 1);
  CHECK(g.edges()[0].v == 2);
  CHECK(g.edges()[0].label == "(1,2)");
  CHECK(g.edges()[0].mult == 1);
  CHECK(g.edges()[1].label == "a");
  CHECK(g.edges()[1].mult == -2);
  CHECK(parse_graph_json(R"({"vertices": 2, "edges": []})").edges().empty());
}

TEST_CASE("graph JSON errors name the offending edge") {
  CHECK(error_of("{").find("malformed graph JSON") != std::string::npos);
  CHECK(error_of("[]").find("must be an object") != std::string::npos);
  CHECK(error_of(R"({"edges": []})").find("\"vertices\"") != std::string::npos);
  CHECK(error_of(R"({"vertices": 0, "edges": []})").find("positive") != std::string::npos);
  CHECK(error_of(R"({"vertices": 2})").find("\"edges\"") != std::string::npos);
  const std::string loop = error_of(R"({"vertices": 3, "edges": [{"u": 1, "v": 2}, {"u": 3, "v": 3}]})");
  CHECK(loop.find("edge #1") != std::string::npos);
  CHECK(loop.find("loop") != std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [{"u": 1, "v": 4}]})").find("out of range") != std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [{"u": 1, "v": 2, "mult": 0}]})").find("zero multiplicity") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [{"u": 1, "v": 2}, {"u": 2, "v": 1}]})").find("duplicate") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [{"u": 1, "v": 2, "label": ""}]})").find("empty label") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [{"u": "1", "v": 2}]})").find("wrong type") != std::string::npos);
  CHECK(error_of(R"({"vertices": 3, "edges": [7]})").find("edge #0") != std::string::npos);
}

TEST_CASE("graph files") {
  const Graph g = read_graph_file(std::string(TEST_DATA_DIR) + "/p3_a_sigma.json");
  CHECK(g == fixtures::p3_single_label_weighted());
  CHECK_THROWS_AS(read_graph_file(std::string(TEST_DATA_DIR) + "/missing.json"), ParseError);
}

TEST_CASE("graph JSON round trip") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 3),
                                         {-3, -1, 1, 2});
    CHECK(parse_graph_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("binomial text") {
  const Binomial b = parse_binomial("r{1|23}*r{3|12} - r{2|13}*r{123|.}", 3);
  CHECK(format_binomial(b, 3) == "r{1|23}*r{3|12} - r{2|13}*r{123|.}");
  CHECK(parse_binomial("  r{1|23} * r{12|3}-r{13|2} *r{.|123} ", 3) == b);
  const Binomial p = parse_binomial("r{1|23}^2 - 1", 3);
  CHECK(format_binomial(p, 3) == "r{1|23}^2 - 1");
  CHECK(p.minus() == Monomial(4, 0));
  CHECK(parse_binomial("r{1|23}*r{1|23} - 1", 3) == p);
  CHECK(format_monomial(Monomial(4, 0), 3) == "1");
}

TEST_CASE("malformed binomials") {
  CHECK_THROWS_AS(parse_binomial("r{1|23}", 3), ParseError);
  CHECK_THROWS_AS(parse_binomial("r{1|23} - r{1|23}", 3), ParseError);
  CHECK_THROWS_AS(parse_binomial("r{1|23} - r{1|234}", 3), ParseError);
  CHECK_THROWS_AS(parse_binomial("r{1|23}^x - 1", 3), ParseError);
  CHECK_THROWS_AS(parse_binomial("r{1|23 - 1", 3), ParseError);
  CHECK_THROWS_AS(parse_binomial("2*r{1|23} - 1", 3), ParseError);
  try {
    parse_binomial("r{1|23} + r{3|12}", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("r{1|23} + r{3|12}") != std::string::npos);
  }
}

TEST_CASE("binomial round trip on generated ideals") {
  for (const Graph& g : {fixtures::path(4), fixtures::five_vertex(), fixtures::p3_single_label_weighted()}) {
    const Ideal ideal = toric_ideal(g);
    for (const Binomial& b : ideal.gens())
      CHECK(parse_binomial(format_binomial(b, g.vertex_count()), g.vertex_count()) == b);
  }
}

TEST_CASE("ideal text and JSON") {
  CHECK(format_ideal_text(toric_ideal(fixtures::complete(2))) == "(0)\n");
  CHECK(format_ideal_text(toric_ideal(fixtures::path(3))) == "r{1|23}*r{3|12} - r{2|13}*r{123|.}\n");
  for (const Graph& g : {fixtures::path(3), fixtures::path(4), fixtures::complete(2), Graph(2, {})}) {
    const Ideal ideal = toric_ideal(g);
    const Ideal back = parse_ideal_json(ideal_to_json(ideal));
    CHECK(back.ground_size() == ideal.ground_size());
    CHECK(back.gens() == ideal.gens());
  }
  CHECK_THROWS_AS(parse_ideal_json(R"({"n": 3, "order": "grlex", "generators": []})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"n": 3, "generators": [{"plus": {"1|23": 1}}]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"n": 3, "generators": [{"plus": {"1|23": -1}, "minus": {}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"n": 3, "generators": [{"plus": {"1|23": 1}, "minus": {"23|1": 1}}]})"),
                  ParseError);
}

TEST_CASE("matrix table") {
  const std::string text = format_matrix(exponent_matrix(fixtures::p3_single_label()));
  CHECK(text ==
        "    1|23 3|12 2|13 123|.\n"
        "s_a    1    1    2     0\n"
        "t_a    1    1    0     2\n");
}
