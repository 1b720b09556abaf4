#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cutideal;
using namespace fixtures;

namespace {

Partition part(const char* s, int n) { return parse_partition(s, n); }

bool same_ideal(const Ideal& a, const std::vector<std::string>& gens) {
  return ideal_equal(a, ideal_of(gens, a.ground_size()));
}

}  // namespace

TEST_CASE("exponent matrix of P3") {
  const ExponentMatrix a = exponent_matrix(path(3));
  CHECK(a.rows() == std::vector<RowKey>{{"(1,2)", true}, {"(2,3)", true}, {"(1,2)", false}, {"(2,3)", false}});
  CHECK(a.cols() == all_partitions(3));
  // Column of 2|13: both edges cut.
  CHECK(a.column(part("2|13", 3).index()) == std::vector<std::int64_t>{1, 1, 0, 0});
  CHECK(a.column(part("123|.", 3).index()) == std::vector<std::int64_t>{0, 0, 1, 1});
  CHECK(*a.row_index({"(2,3)", false}) == 3);
  CHECK_FALSE(a.row_index({"zz", true}).has_value());
}

TEST_CASE("exponent matrix of P3 with one label") {
  const ExponentMatrix a = exponent_matrix(p3_single_label());
  CHECK(a.rows().size() == 2);
  CHECK(a.column(part("1|23", 3).index()) == std::vector<std::int64_t>{1, 1});
  CHECK(a.column(part("2|13", 3).index()) == std::vector<std::int64_t>{2, 0});
  CHECK(a.column(part("3|12", 3).index()) == std::vector<std::int64_t>{1, 1});
  CHECK(a.column(part("123|.", 3).index()) == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("exponent matrices agree with the definition on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 3),
                                         {-2, -1, 1, 2, 3});
    CHECK(exponent_matrix(g).entries() == oracle::exponent_matrix(g));
  }
}

TEST_CASE("image monomials") {
  const LaurentMonomial m = image_monomial(p3_single_label_weighted(), part("2|13", 3));
  // s_a^{-1} s_a^{1}: cancels to 1.
  CHECK(m.empty());
  const LaurentMonomial k = image_monomial(p3_single_label_weighted(), part("123|.", 3));
  CHECK(k == LaurentMonomial{});
  const LaurentMonomial c = image_monomial(path(3), part("1|23", 3));
  CHECK(c == LaurentMonomial{{{"(1,2)", true}, 1}, {{"(2,3)", false}, 1}});
}

TEST_CASE("dimensions of the three P3 variants") {
  CHECK(rank(exponent_matrix(path(3))) == 3);
  CHECK(rank(exponent_matrix(p3_single_label())) == 2);
  CHECK(rank(exponent_matrix(p3_single_label_weighted())) == 1);
}

TEST_CASE("cut ideals of small graphs") {
  CHECK(same_ideal(toric_ideal(path(3)), p3_gens));
  CHECK(toric_ideal(path(3)).gens().size() == 1);
  CHECK(same_ideal(toric_ideal(p3_single_label()), p3_single_label_gens));
  CHECK(same_ideal(toric_ideal(p3_single_label_weighted()), p3_weighted_gens));
  CHECK(toric_ideal(complete(2)).is_zero());
  CHECK(toric_ideal(complete(3)).is_zero());
  CHECK(same_ideal(toric_ideal(Graph(1, {})), {"r{1|.} - 1"}));
  CHECK(same_ideal(toric_ideal(disjoint_union(complete(2), complete(2))), k2_k2_gens));
  CHECK(same_ideal(toric_ideal(path(4)), p4_gens));
  CHECK(same_ideal(toric_ideal(complete(4)), k4_gens));
}

TEST_CASE("edgeless graphs send every variable to 1") {
  const Ideal i = toric_ideal(Graph(3, {}));
  CHECK(i.gens().size() == 4);
  for (const Binomial& b : i.gens()) {
    CHECK(degree(b.plus()) == 1);
    CHECK(degree(b.minus()) == 0);
  }
}

TEST_CASE("the returned basis is the reduced degrevlex basis") {
  const Ideal i = toric_ideal(five_vertex());
  CHECK(i.is_reduced());
  CHECK(i.order().kind() == TermOrder::Kind::Degrevlex);
  CHECK(groebner_basis(i.gens(), TermOrder::degrevlex()) == i.gens());
}

TEST_CASE("membership oracle") {
  const Graph g = path(3);
  CHECK(membership(g, parse_binomial("r{1|23}*r{3|12} - r{2|13}*r{123|.}", 3)));
  CHECK_FALSE(membership(g, parse_binomial("r{1|23} - r{3|12}", 3)));
  CHECK(membership(p3_single_label(), parse_binomial("r{1|23} - r{3|12}", 3)));
  CHECK(membership(p3_single_label_weighted(), parse_binomial("r{2|13} - 1", 3)));
  CHECK_THROWS_AS(membership(g, parse_binomial("r{1|234} - r{2|134}", 4)), std::invalid_argument);
}

TEST_CASE("contains, eliminate, sum") {
  const Ideal p4 = toric_ideal(path(4));
  for (const auto& b : parse_all(p4_gens, 4)) CHECK(contains(p4, b));
  CHECK(contains(ideal_of(p4_gens, 4), p4.gens().back()));
  CHECK_FALSE(contains(p4, parse_binomial("r{1|234} - r{2|134}", 4)));

  // Killing r{1|23} from the P3 ideal leaves nothing.
  CHECK(eliminate(toric_ideal(path(3)), {part("1|23", 3)}).is_zero());
  CHECK(eliminate(toric_ideal(path(3)), {}).gens() == toric_ideal(path(3)).gens());

  const Ideal a(3, parse_all({"r{1|23} - r{3|12}"}, 3));
  const Ideal b(3, parse_all({"r{3|12} - r{2|13}"}, 3));
  const Ideal s = ideal_sum(a, b);
  CHECK(s.gens().size() == 2);
  CHECK(contains(s, parse_binomial("r{1|23} - r{2|13}", 3)));
  CHECK_THROWS_AS(ideal_equal(a, p4), std::invalid_argument);
}

TEST_CASE("make_binomial") {
  const Binomial b = make_binomial(3, {{part("1|23", 3), 1}, {part("3|12", 3), 1}},
                                   {{part("2|13", 3), 1}, {part("123|.", 3), 1}});
  CHECK(b == parse_binomial(p3_gens[0], 3));
  CHECK_THROWS_AS(make_binomial(3, {{part("1|2", 2), 1}}, {}), std::invalid_argument);
}

TEST_CASE("every generator passes the oracle and kernels have the right size") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, static_cast<int>(rng() % 3), {-2, -1, 1, 2});
    const ExponentMatrix a = exponent_matrix(g);
    const LatticeBasis k = integer_kernel(a);
    CHECK(k.rows() + oracle::rank(a.entries()) == a.cols().size());
    const Ideal ideal = toric_ideal(g);
    for (const Binomial& b : ideal.gens()) CHECK(membership(a, b));
  }
}

TEST_CASE("completeness against brute force up to degree 3") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const Graph g = oracle::random_graph(rng, n, static_cast<int>(rng() % 3), {-1, 1, 2});
    const Ideal ideal = toric_ideal(g);
    for (const Binomial& b : oracle::kernel_binomials(oracle::exponent_matrix(g), 3))
      CHECK(reduces_to_zero(b, ideal.gens()));
  }
}

TEST_CASE("renaming vertices renames the ideal") {
  const Graph g = five_vertex();
  const std::vector<Vertex> perm{2, 5, 1, 3, 4};
  const Graph p = permute_vertices(g, perm);
  std::vector<Binomial> moved;
  auto rename = [&](const Monomial& m) {
    Monomial out(m.size(), 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      const Partition q = Partition::from_index(5, k);
      VertexSet side = 0;
      for (Vertex v = 1; v <= 5; ++v)
        if (q.in_side(v)) side |= VertexSet{1} << (perm[v - 1] - 1);
      out[Partition(5, side).index()] = m[k];
    }
    return out;
  };
  const Ideal ideal = toric_ideal(g);
  for (const Binomial& b : ideal.gens()) moved.emplace_back(rename(b.plus()), rename(b.minus()));
  CHECK(ideal_equal(Ideal(5, moved), toric_ideal(p)));
}
