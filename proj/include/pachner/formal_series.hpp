#pragma once

#include <vector>

#include "pachner/matrix.hpp"

namespace pachner {

/// Square matrices over Q[T]/T^{N+1}: coefficient k is the T^k matrix.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(int dim, int order);

  /// The constant series m.
  static MatrixSeries constant(const Matrix& m, int order);
  static MatrixSeries identity(int dim, int order);
  /// exp(T h), truncated.
  static MatrixSeries exp_t(const Matrix& h, int order);
  /// (exp(2Th) - exp(Th)) / h as the series sum_k h^k (2^{k+1} - 1) T^{k+1} / (k+1)!,
  /// which needs no inverse of h.
  static MatrixSeries divided_difference(const Matrix& h, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const Matrix& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, const Matrix& m);

  MatrixSeries operator+(const MatrixSeries& o) const;
  MatrixSeries operator-(const MatrixSeries& o) const;
  MatrixSeries operator*(const MatrixSeries& o) const;
  MatrixSeries scaled(const Rational& f) const;
  /// Constant matrix on the left or right.
  MatrixSeries left(const Matrix& m) const;
  MatrixSeries right(const Matrix& m) const;
  bool is_zero() const;
  bool operator==(const MatrixSeries& o) const;

  /// First nonzero (k, row, col), or k = -1.
  struct Witness {
    int k = -1, row = 0, col = 0;
    Rational value;
  };
  Witness first_nonzero() const;

 private:
  void check(const MatrixSeries& o) const;

  int dim_ = 0;
  int order_ = 0;
  std::vector<Matrix> c_;
};

}  // namespace pachner
