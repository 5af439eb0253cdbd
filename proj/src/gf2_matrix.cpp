#include "pachner/gf2_matrix.hpp"

#include <algorithm>

#include "pachner/gf2_kernels.hpp"
#include "pachner/ring.hpp"

namespace pachner {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64) {
  if (rows < 0 || cols < 0) throw Error("negative bit matrix dimension");
  if (words_ == 0) words_ = 1;
  data_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

void BitMatrix::set(int r, int c, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (c & 63);
  if (v)
    row(r)[c >> 6] |= mask;
  else
    row(r)[c >> 6] &= ~mask;
}

namespace {

// Incremental echelon form: each row is reduced against the existing pivots
// (keyed by leading column) and becomes a pivot itself if nonzero.
struct Echelon {
  std::size_t words;
  std::vector<std::vector<std::uint64_t>> pivot_rows;
  std::vector<int> pivot_row_of_col;

  Echelon(int cols, std::size_t w) : words(w), pivot_row_of_col(cols + 1, -1) {}

  long insert(std::vector<std::uint64_t> r, int limit_col) {
    const auto& k = gf2::active_kernels();
    while (true) {
      long lead = k.first_set(r.data(), words, 0);
      if (lead < 0 || lead >= limit_col) return lead;
      int p = pivot_row_of_col[lead];
      if (p < 0) {
        pivot_row_of_col[lead] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(std::move(r));
        return -2;
      }
      k.xor_into(r.data(), pivot_rows[p].data(), words);
    }
  }
};

}  // namespace

int gf2_rank(const BitMatrix& m) {
  Echelon e(m.cols(), m.words_per_row());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> row(m.row(r), m.row(r) + m.words_per_row());
    e.insert(std::move(row), m.cols());
  }
  return static_cast<int>(e.pivot_rows.size());
}

std::optional<std::vector<std::uint8_t>> gf2_solve(const BitMatrix& a, const std::vector<std::uint8_t>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("right-hand side length mismatch");
  const int n = a.cols();
  BitMatrix aug(a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r), a.row(r) + a.words_per_row(), aug.row(r));
    for (int c = n; c < static_cast<int>(aug.words_per_row() * 64); ++c) aug.set(r, c, false);
    aug.set(r, n, b[r] & 1);
  }
  Echelon e(n + 1, aug.words_per_row());
  for (int r = 0; r < aug.rows(); ++r) {
    std::vector<std::uint64_t> row(aug.row(r), aug.row(r) + aug.words_per_row());
    long lead = e.insert(std::move(row), n);
    if (lead == n) return std::nullopt;
  }
  std::vector<std::uint8_t> x(n, 0);
  for (int col = n - 1; col >= 0; --col) {
    int p = e.pivot_row_of_col[col];
    if (p < 0) continue;
    const auto& row = e.pivot_rows[p];
    auto bit = [&](int c) { return (row[c >> 6] >> (c & 63)) & 1u; };
    std::uint8_t v = static_cast<std::uint8_t>(bit(n));
    for (int j = col + 1; j < n; ++j) {
      if (bit(j)) v ^= x[j];
    }
    x[col] = v;
  }
  return x;
}

void SparseGf2::toggle(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols()) throw Error("sparse index out of range");
  columns_[c].push_back(r);
}

void SparseGf2::finalize() {
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end());
    std::vector<int> out;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(col[i]);
      i = j;
    }
    col = std::move(out);
  }
}

BitMatrix SparseGf2::to_dense() const {
  BitMatrix m(rows_, cols());
  for (int c = 0; c < cols(); ++c)
    for (int r : columns_[c]) m.flip(r, c);
  return m;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Gf2ColumnReducer::Gf2ColumnReducer(const SparseGf2& m) : pivot_of_row_(m.rows(), -1) {
  reduced_.resize(m.cols());
  combo_.resize(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    std::vector<int> col = m.column(c);
    std::vector<int> combo{c};
    while (!col.empty()) {
      int low = col.back();
      int p = pivot_of_row_[low];
      if (p < 0) break;
      col = symmetric_difference(col, reduced_[p]);
      combo = symmetric_difference(combo, combo_[p]);
    }
    if (col.empty()) {
      kernel_.push_back(combo);
    } else {
      pivot_of_row_[col.back()] = c;
      ++rank_;
    }
    reduced_[c] = std::move(col);
    combo_[c] = std::move(combo);
  }
}

std::optional<std::vector<int>> Gf2ColumnReducer::express(std::vector<int> target) const {
  std::sort(target.begin(), target.end());
  std::vector<int> used;
  while (!target.empty()) {
    int low = target.back();
    if (low >= static_cast<int>(pivot_of_row_.size())) return std::nullopt;
    int p = pivot_of_row_[low];
    if (p < 0) return std::nullopt;
    target = symmetric_difference(target, reduced_[p]);
    used = symmetric_difference(used, combo_[p]);
  }
  return used;
}

}  // namespace pachner
