#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cutideal {

// Dense row-major integer matrix. Products use checked 64-bit arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<std::int64_t> column(std::size_t c) const;
  void append_row(std::span<const std::int64_t> values);

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Throws std::overflow_error if an entry leaves the 64-bit range.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// M * v.
std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v);

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

// A basis of { u in Z^cols : m u = 0 }, one vector per row.
//
// Obtained from a unimodular row reduction of [m^T | I]; the rows whose
// m^T-part vanishes span the kernel lattice, which is therefore saturated.
// The basis is size-reduced pairwise before it is returned.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace cutideal
