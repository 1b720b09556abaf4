#include "cutideal/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>

namespace cutideal {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

std::int64_t mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw std::overflow_error("integer matrix product overflows 64 bits");
  return acc;
}

std::int64_t narrow(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("kernel basis entry exceeds 64 bits");
  return x.convert_to<std::int64_t>();
}

// row[i] -= q * row[j] over the whole row.
void axpy(std::vector<BigInt>& target, const std::vector<BigInt>& source, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < target.size(); ++c) target[c] -= q * source[c];
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Nearest integer to num/den, den > 0.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt twice = 2 * num + den;
  BigInt q = twice / (2 * den);
  if (twice < 0 && q * 2 * den != twice) q -= 1;
  return q;
}

// Pairwise size reduction: subtract rounded multiples of other rows while
// the squared norm strictly drops. Unimodular, so the lattice is unchanged.
void size_reduce(BigMatrix& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const BigInt nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        const BigInt q = round_div(dot(basis[i], basis[j]), nj);
        if (q == 0) continue;
        std::vector<BigInt> candidate = basis[i];
        axpy(candidate, basis[j], q);
        if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
          basis[i] = std::move(candidate);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::append_row(std::span<const std::int64_t> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = mul_add(out(r, c), x, b(k, c));
    }
  return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match matrix");
  std::vector<std::int64_t> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = mul_add(out[r], m(r, c), v[c]);
  return out;
}

std::size_t rank(const IntMatrix& m) {
  BigMatrix a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t width = m.cols();
  const std::size_t height = m.rows();
  // Row k of the work matrix is [column k of m | e_k].
  BigMatrix work(width, std::vector<BigInt>(height + width));
  for (std::size_t k = 0; k < width; ++k) {
    for (std::size_t r = 0; r < height; ++r) work[k][r] = m(r, k);
    work[k][height + k] = 1;
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < height && pivot_row < width; ++col) {
    // Euclid on the column until a single nonzero entry remains below pivot_row.
    while (true) {
      std::size_t best = width;
      for (std::size_t r = pivot_row; r < width; ++r)
        if (work[r][col] != 0 && (best == width || abs(work[r][col]) < abs(work[best][col])))
          best = r;
      if (best == width) break;
      std::swap(work[pivot_row], work[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < width; ++r) {
        if (work[r][col] == 0) continue;
        axpy(work[r], work[pivot_row], work[r][col] / work[pivot_row][col]);
        if (work[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }

  BigMatrix basis;
  for (std::size_t r = pivot_row; r < width; ++r)
    basis.emplace_back(work[r].begin() + static_cast<std::ptrdiff_t>(height), work[r].end());
  size_reduce(basis);

  IntMatrix out(basis.size(), width);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) out(r, c) = narrow(basis[r][c]);
  return out;
}

}  // namespace cutideal
