#include "pachner/matrix.hpp"

#include <sstream>

namespace pachner {

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(Ring ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || ring_ != o.ring_) throw Error("matrix product shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (pachner::is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (pachner::is_zero(b)) continue;
        out.data_[static_cast<size_t>(i) * out.cols_ + j] += a * b;
      }
    }
  }
  if (ring_ == Ring::GF2) {
    for (auto& v : out.data_) v = reduce(ring_, v);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_) throw Error("matrix sum shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = add(ring_, data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_) throw Error("matrix difference shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub(ring_, data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(const Rational& f) const {
  Matrix out(ring_, rows_, cols_);
  Rational ff = reduce(ring_, f);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = mul(ring_, data_[i], ff);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.data_[static_cast<size_t>(j) * rows_ + i] = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!pachner::is_zero(v)) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << pachner::to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

Elimination row_reduce(const Matrix& m) {
  Elimination e{m, {}, 0};
  Matrix& a = e.reduced;
  const Ring ring = a.ring();
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) {
        Rational tmp = a(row, c);
        a.set(row, c, a(pivot, c));
        a.set(pivot, c, tmp);
      }
    }
    Rational scale = inv(ring, a(row, col));
    for (int c = col; c < a.cols(); ++c) a.set(row, c, mul(ring, a(row, c), scale));
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (int c = col; c < a.cols(); ++c) {
        if (is_zero(a(row, c))) continue;
        a.set(r, c, sub(ring, a(r, c), mul(ring, f, a(row, c))));
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("right-hand side length mismatch");
  Matrix aug(a.ring(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  Elimination e = row_reduce(aug);
  std::vector<Rational> x(a.cols());
  for (int r = 0; r < e.rank; ++r) {
    int pc = e.pivot_cols[r];
    if (pc == a.cols()) return std::nullopt;
    x[pc] = e.reduced(r, a.cols());
  }
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  Elimination e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (int r = 0; r < e.rank; ++r) v[e.pivot_cols[r]] = neg(m.ring(), e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> kernel_vector(const Matrix& m) {
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  const int n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.ring(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  Elimination e = row_reduce(aug);
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.ring(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, e.reduced(i, n + j));
  return out;
}

}  // namespace pachner
