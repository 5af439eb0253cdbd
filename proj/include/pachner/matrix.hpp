#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pachner/ring.hpp"

namespace pachner {

/// Dense exact matrix over GF2 or Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, int rows, int cols);

  static Matrix identity(Ring ring, int n);

  Ring ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, const Rational& v) { data_[static_cast<size_t>(r) * cols_ + c] = reduce(ring_, v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& f) const;
  Matrix transposed() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  Ring ring_ = Ring::Q;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Row echelon data from exact Gaussian elimination. Pivots are chosen as the
/// first nonzero entry scanning rows top to bottom, columns left to right.
struct Elimination {
  Matrix reduced;               // reduced row echelon form
  std::vector<int> pivot_cols;  // pivot column of each nonzero row
  int rank = 0;
};

Elimination row_reduce(const Matrix& m);

/// Some x with a*x = b, or nullopt. Free variables are set to zero.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// A nonzero kernel vector of m, or nullopt if m has full column rank.
std::optional<std::vector<Rational>> kernel_vector(const Matrix& m);

/// Basis of the kernel (one vector per free column, in column order).
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace pachner
