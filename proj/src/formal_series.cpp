#include "pachner/formal_series.hpp"

namespace pachner {

MatrixSeries::MatrixSeries(int dim, int order) : dim_(dim), order_(order) {
  if (order < 0) throw Error("negative truncation order");
  c_.assign(order + 1, Matrix(Ring::Q, dim, dim));
}

MatrixSeries MatrixSeries::constant(const Matrix& m, int order) {
  if (m.rows() != m.cols()) throw Error("series coefficients must be square");
  if (m.ring() != Ring::Q) throw Error("series are defined over Q");
  MatrixSeries s(m.rows(), order);
  s.c_[0] = m;
  return s;
}

MatrixSeries MatrixSeries::identity(int dim, int order) { return constant(Matrix::identity(Ring::Q, dim), order); }

MatrixSeries MatrixSeries::exp_t(const Matrix& h, int order) {
  MatrixSeries s(h.rows(), order);
  Matrix p = Matrix::identity(Ring::Q, h.rows());
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      p = p * h;
      fact *= k;
    }
    s.c_[k] = p.scaled(Rational(1) / fact);
  }
  return s;
}

MatrixSeries MatrixSeries::divided_difference(const Matrix& h, int order) {
  MatrixSeries s(h.rows(), order);
  Matrix p = Matrix::identity(Ring::Q, h.rows());
  Rational fact = 1;
  mpz_class two = 1;
  for (int k = 0; k + 1 <= order; ++k) {
    if (k > 0) p = p * h;
    fact *= k + 1;
    two *= 2;
    s.c_[k + 1] = p.scaled(Rational(two - 1) / fact);
  }
  return s;
}

void MatrixSeries::set_coeff(int k, const Matrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw Error("coefficient has the wrong size");
  c_.at(k) = m;
}

void MatrixSeries::check(const MatrixSeries& o) const {
  if (dim_ != o.dim_ || order_ != o.order_) throw Error("series shapes differ");
}

MatrixSeries MatrixSeries::operator+(const MatrixSeries& o) const {
  check(o);
  MatrixSeries r = *this;
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

MatrixSeries MatrixSeries::operator-(const MatrixSeries& o) const {
  check(o);
  MatrixSeries r = *this;
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

MatrixSeries MatrixSeries::operator*(const MatrixSeries& o) const {
  check(o);
  MatrixSeries r(dim_, order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  return r;
}

MatrixSeries MatrixSeries::scaled(const Rational& f) const {
  MatrixSeries r = *this;
  for (auto& m : r.c_) m = m.scaled(f);
  return r;
}

MatrixSeries MatrixSeries::left(const Matrix& m) const {
  MatrixSeries r = *this;
  for (auto& x : r.c_) x = m * x;
  return r;
}

MatrixSeries MatrixSeries::right(const Matrix& m) const {
  MatrixSeries r = *this;
  for (auto& x : r.c_) x = x * m;
  return r;
}

bool MatrixSeries::is_zero() const {
  for (const auto& m : c_)
    if (!m.is_zero()) return false;
  return true;
}

bool MatrixSeries::operator==(const MatrixSeries& o) const { return dim_ == o.dim_ && order_ == o.order_ && c_ == o.c_; }

MatrixSeries::Witness MatrixSeries::first_nonzero() const {
  for (int k = 0; k <= order_; ++k)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (sgn(c_[k](i, j)) != 0) return Witness{k, i, j, c_[k](i, j)};
  return {};
}

}  // namespace pachner
