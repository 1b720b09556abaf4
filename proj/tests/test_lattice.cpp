#include <limits>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

using namespace cutideal;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
  return m;
}

std::int64_t det(std::vector<std::vector<std::int64_t>> a) {
  // Bareiss; entries stay small in these tests.
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::int64_t gcd_of_maximal_minors(const IntMatrix& basis) {
  const std::size_t k = basis.rows(), n = basis.cols();
  std::int64_t g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::vector<std::int64_t>> sub(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((mask >> c) & 1U) sub[r].push_back(basis(r, c));
    g = std::gcd(g, det(sub));
  }
  return g;
}

}  // namespace

TEST_CASE("products and overflow") {
  const IntMatrix a = from_rows({{1, 2}, {3, 4}});
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a * a == from_rows({{7, 10}, {15, 22}}));
  CHECK(multiply(a, std::vector<std::int64_t>{1, -1}) == std::vector<std::int64_t>{-1, -1});
  CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
  const IntMatrix big = from_rows({{std::numeric_limits<std::int64_t>::max(), 1}});
  CHECK_THROWS_AS(big * from_rows({{2}, {0}}), std::overflow_error);
}

TEST_CASE("rank agrees with modular elimination") {
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(IntMatrix(3, 4)) == 0);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, 3);
    if (r > 2 && t % 2) {
      for (std::size_t k = 0; k < c; ++k) m(r - 1, k) = m(0, k) - 2 * m(1, k);
    }
    CHECK(rank(m) == oracle::rank(m));
  }
}

TEST_CASE("integer kernel: annihilated, right dimension, saturated") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 3, c = 2 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 3);
    if (t % 3 == 0)
      for (std::size_t k = 0; k < c; ++k) m(0, k) *= 2;
    const IntMatrix kernel = integer_kernel(m);
    REQUIRE(kernel.rows() == c - oracle::rank(m));
    for (std::size_t k = 0; k < kernel.rows(); ++k)
      for (auto x : multiply(m, kernel.row(k))) CHECK(x == 0);
    if (kernel.rows() > 0) {
      CHECK(rank(kernel) == kernel.rows());
      // A full-rank sublattice is saturated iff its maximal minors are coprime.
      CHECK(std::abs(gcd_of_maximal_minors(kernel)) == 1);
    }
  }
}

TEST_CASE("kernel of a matrix with a non-saturated row lattice") {
  // 2x = 0 over Z has kernel e2, e3 only; the basis must not contain 2 e1.
  const IntMatrix m = from_rows({{2, 0, 0}});
  const IntMatrix k = integer_kernel(m);
  REQUIRE(k.rows() == 2);
  for (std::size_t r = 0; r < 2; ++r) CHECK(k(r, 0) == 0);
  CHECK(std::abs(gcd_of_maximal_minors(k)) == 1);
}
