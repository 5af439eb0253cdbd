#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pachner {

/// Dense bit-packed GF2 matrix, row major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c, bool v);
  void flip(int r, int c) { row(r)[c >> 6] ^= (std::uint64_t{1} << (c & 63)); }

  std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
  const std::uint64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

int gf2_rank(const BitMatrix& m);

/// Some x with a*x = b over GF2 (free variables zero), or nullopt.
std::optional<std::vector<std::uint8_t>> gf2_solve(const BitMatrix& a, const std::vector<std::uint8_t>& b);

/// Sparse GF2 matrix stored by columns (sorted row indices).
class SparseGf2 {
 public:
  SparseGf2() = default;
  SparseGf2(int rows, int cols) : rows_(rows), columns_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  const std::vector<int>& column(int c) const { return columns_[c]; }
  /// Adds 1 at (r, c); entries that appear twice cancel.
  void toggle(int r, int c);
  void finalize();

  BitMatrix to_dense() const;

 private:
  int rows_ = 0;
  std::vector<std::vector<int>> columns_;
};

/// Column reduction with the lowest-one pivot rule. Keeps, for every reduced
/// column, the set of original columns that sum to it, so that a right-hand
/// side can later be written as a combination of columns.
class Gf2ColumnReducer {
 public:
  explicit Gf2ColumnReducer(const SparseGf2& m);

  int rank() const { return rank_; }
  /// True if column c survived reduction (is independent of earlier columns).
  bool is_pivot(int c) const { return !reduced_[c].empty(); }
  /// Original columns whose sum is `target`, or nullopt if target is not in
  /// the column span.
  std::optional<std::vector<int>> express(std::vector<int> target) const;
  /// Kernel basis as sets of original columns.
  const std::vector<std::vector<int>>& kernel() const { return kernel_; }

 private:
  std::vector<std::vector<int>> reduced_;
  std::vector<std::vector<int>> combo_;
  std::vector<int> pivot_of_row_;
  std::vector<std::vector<int>> kernel_;
  int rank_ = 0;
};

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace pachner
